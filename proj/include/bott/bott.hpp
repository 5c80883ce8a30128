#pragma once

#include "bott/action_data.hpp"
#include "bott/errors.hpp"
#include "bott/json_io.hpp"
#include "bott/localize.hpp"
#include "bott/obstruct.hpp"
#include "bott/partition.hpp"
#include "bott/pontryagin_poly.hpp"
#include "bott/rational.hpp"
#include "bott/surgery.hpp"
