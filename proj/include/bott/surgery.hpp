#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bott/action_data.hpp"
#include "bott/errors.hpp"
#include "bott/localize.hpp"

// Equivariant surgeries as transformations of fixed-point data. No
// smooth topology is represented; realizability of outputs is monitored
// by the localization consistency checks, not proven.

namespace bott {

namespace detail {

inline std::vector<long long> sorted_exponents(const IsolatedFixedPoint& pt) {
  std::vector<long long> e = pt.exponents;
  std::sort(e.begin(), e.end());
  return e;
}

inline void check_index(const CircleActionData& d, std::size_t i,
                        const char* who) {
  if (i >= d.isolated.size())
    throw std::invalid_argument(std::string(who) +
                                ": fixed-point index out of range");
}

}  // namespace detail

// Equivariant connected sum about isolated fixed points ia of a and ib
// of b. The selected points must carry the same exponent multiset and
// opposite signs; both disappear, everything else is kept.
inline CircleActionData connected_sum(const CircleActionData& a, std::size_t ia,
                                      const CircleActionData& b,
                                      std::size_t ib) {
  detail::require_valid(a);
  detail::require_valid(b);
  detail::check_index(a, ia, "connected_sum");
  detail::check_index(b, ib, "connected_sum");
  if (a.half_dimension != b.half_dimension)
    throw std::invalid_argument("connected_sum: dimensions differ");
  const auto& x = a.isolated[ia];
  const auto& y = b.isolated[ib];
  if (detail::sorted_exponents(x) != detail::sorted_exponents(y))
    throw HypothesisError(
        "connected_sum: selected points must have the same set of exponents "
        "(Definition 2.1)");
  if (x.sign != -y.sign)
    throw HypothesisError(
        "connected_sum: selected points must have opposite signs "
        "(Definition 2.1)");

  CircleActionData out;
  out.half_dimension = a.half_dimension;
  out.label = a.label.empty() || b.label.empty() ? a.label + b.label
                                                 : a.label + "#" + b.label;
  for (std::size_t i = 0; i < a.isolated.size(); ++i)
    if (i != ia) out.isolated.push_back(a.isolated[i]);
  for (std::size_t i = 0; i < b.isolated.size(); ++i)
    if (i != ib) out.isolated.push_back(b.isolated[i]);
  out.surfaces = a.surfaces;
  out.surfaces.insert(out.surfaces.end(), b.surfaces.begin(),
                      b.surfaces.end());
  return out;
}

// Blow-up at isolated fixed point i, i.e. connected sum with the
// oppositely-signed weighted projective space. Two supported regimes:
//  (a) dimension 4, equal exponents: the point becomes a genus-0 surface
//      with normal Euler number -sign(x);
//  (b) pairwise distinct exponents: the point is replaced by the r fixed
//      points of the weighted action on CP^r away from the centre, signs
//      globally negated when sign(x) = +1.
inline CircleActionData blow_up(const CircleActionData& data, std::size_t i) {
  detail::require_valid(data);
  detail::check_index(data, i, "blow_up");
  const IsolatedFixedPoint x = data.isolated[i];
  const long long r = data.half_dimension;

  CircleActionData out;
  out.half_dimension = r;
  out.label = data.label.empty() ? data.label : data.label + "^";
  for (std::size_t j = 0; j < data.isolated.size(); ++j)
    if (j != i) out.isolated.push_back(data.isolated[j]);
  out.surfaces = data.surfaces;

  if (detail::equal_exponents(x)) {
    if (r != 2)
      throw UnsupportedDataError(
          "blow_up: equal exponents outside dimension 4 create a "
          "positive-dimensional exceptional component the data model cannot "
          "hold");
    out.surfaces.push_back({0, -x.sign, "exceptional"});
    return out;
  }

  std::vector<long long> weights = x.exponents;
  std::sort(weights.begin(), weights.end());
  if (std::adjacent_find(weights.begin(), weights.end()) != weights.end())
    throw UnsupportedDataError(
        "blow_up: repeated (but not all equal) exponents give a degenerate "
        "weighted action outside the supported regimes");
  weights.insert(weights.begin(), 0);

  CircleActionData model = cp_action(weights);
  for (std::size_t j = 1; j < model.isolated.size(); ++j) {
    IsolatedFixedPoint pt = model.isolated[j];
    if (x.sign == +1) pt.sign = -pt.sign;
    out.isolated.push_back(std::move(pt));
  }
  return out;
}

struct SurgeryOp {
  enum class Kind { ConnectedSum, BlowUp } kind = Kind::BlowUp;
  std::size_t index = 0;    // point in `before` (or first operand)
  std::size_t index_b = 0;  // point in `second`
  std::optional<CircleActionData> second;  // connected-sum operand
};

struct InvariantSnapshot {
  Int euler = 0;
  std::optional<Int> sigma;       // absent when signature() cannot decide
  std::optional<Rational> p1;     // dimension 4 only
};

struct SurgeryReport {
  InvariantSnapshot before, after;
  std::optional<Int> predicted_euler;
  std::optional<Int> predicted_sigma;
  bool consistent = true;  // predictions match whatever was computable
};

namespace detail {

inline InvariantSnapshot snapshot(const CircleActionData& d) {
  InvariantSnapshot s;
  s.euler = euler_number(d);
  try {
    s.sigma = signature(d).value;
  } catch (const std::exception&) {
  }
  if (d.half_dimension == 2) s.p1 = pontryagin_number(d, Partition{1});
  return s;
}

}  // namespace detail

// Compares the invariants of a surgery output against the predicted
// deltas: connected sums add Euler numbers minus 2 and add signatures;
// a blow-up adds r-1 fixed points and shifts the signature by
// -sign(x) when the complex dimension r is even.
inline SurgeryReport bookkeeping(const CircleActionData& before,
                                 const CircleActionData& after,
                                 const SurgeryOp& op) {
  SurgeryReport rep;
  rep.before = detail::snapshot(before);
  rep.after = detail::snapshot(after);

  if (op.kind == SurgeryOp::Kind::ConnectedSum) {
    if (!op.second)
      throw std::invalid_argument("bookkeeping: connected sum needs operand");
    InvariantSnapshot other = detail::snapshot(*op.second);
    rep.predicted_euler = rep.before.euler + other.euler - 2;
    if (rep.before.sigma && other.sigma)
      rep.predicted_sigma = *rep.before.sigma + *other.sigma;
  } else {
    detail::check_index(before, op.index, "bookkeeping");
    const auto& x = before.isolated[op.index];
    const long long r = before.half_dimension;
    rep.predicted_euler =
        rep.before.euler + (detail::equal_exponents(x) ? 1 : r - 1);
    if (rep.before.sigma)
      rep.predicted_sigma = *rep.before.sigma - (r % 2 == 0 ? x.sign : 0);
  }

  if (rep.predicted_euler && *rep.predicted_euler != rep.after.euler)
    rep.consistent = false;
  if (rep.predicted_sigma && rep.after.sigma &&
      *rep.predicted_sigma != *rep.after.sigma)
    rep.consistent = false;
  return rep;
}

}  // namespace bott
