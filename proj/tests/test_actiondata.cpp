#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "bott/action_data.hpp"
#include "bott/json_io.hpp"

using namespace bott;

namespace {

CircleActionData random_valid_data(std::mt19937& rng) {
  std::uniform_int_distribution<long long> ndist(1, 4), mdist(1, 5),
      count(0, 4), coin(0, 1), gdist(0, 3), nedist(-3, 3);
  CircleActionData d;
  d.half_dimension = ndist(rng);
  long long npts = count(rng);
  for (long long i = 0; i < npts; ++i) {
    IsolatedFixedPoint pt;
    for (long long j = 0; j < d.half_dimension; ++j)
      pt.exponents.push_back(mdist(rng));
    pt.sign = coin(rng) ? 1 : -1;
    d.isolated.push_back(std::move(pt));
  }
  if (d.half_dimension == 2)
    for (long long i = count(rng); i > 0; --i)
      d.surfaces.push_back({gdist(rng), nedist(rng), ""});
  d.label = "random";
  return d;
}

}  // namespace

TEST_CASE("validate") {
  auto s4 = sphere_action({1, 1});
  CHECK(validate(s4).empty());

  CircleActionData bad;
  bad.half_dimension = 3;
  bad.surfaces.push_back({0, -1, ""});
  auto v = validate(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].message == "surfaces require dimension 4");

  CircleActionData zeroexp;
  zeroexp.half_dimension = 2;
  zeroexp.isolated.push_back({{0, 1}, 1});
  v = validate(zeroexp);
  REQUIRE(v.size() == 1);
  CHECK(v[0].message == "exponents must be positive");

  CircleActionData badsign;
  badsign.half_dimension = 1;
  badsign.isolated.push_back({{1}, 2});
  CHECK_FALSE(validate(badsign).empty());
}

TEST_CASE("cp_action") {
  auto cp2 = cp_action({0, 1, 2});
  REQUIRE(cp2.isolated.size() == 3);
  CHECK(cp2.isolated[0].exponents == std::vector<long long>({1, 2}));
  CHECK(cp2.isolated[0].sign == 1);
  CHECK(cp2.isolated[1].exponents == std::vector<long long>({1, 1}));
  CHECK(cp2.isolated[1].sign == -1);
  CHECK(cp2.isolated[2].exponents == std::vector<long long>({2, 1}));
  CHECK(cp2.isolated[2].sign == 1);

  auto cp3 = cp_action({0, 1, 2, 3});
  REQUIRE(cp3.isolated.size() == 4);
  for (std::size_t j = 0; j < 4; ++j)
    CHECK(cp3.isolated[j].sign == (j % 2 == 0 ? 1 : -1));

  auto cp1 = cp_action({0, 1});
  REQUIRE(cp1.isolated.size() == 2);
  CHECK(cp1.isolated[0].exponents == std::vector<long long>({1}));
  CHECK(cp1.isolated[0].sign == 1);
  CHECK(cp1.isolated[1].sign == -1);

  CHECK_THROWS_WITH(cp_action({0, 1, 1}),
                    Catch::Matchers::ContainsSubstring("blow_up semantics"));
}

TEST_CASE("cp_action alternating signs for increasing weights") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> wdist(-20, 20), ndist(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long long> w;
    long long n = ndist(rng);
    while (static_cast<long long>(w.size()) < n + 1) {
      long long x = wdist(rng);
      if (std::find(w.begin(), w.end(), x) == w.end()) w.push_back(x);
    }
    std::sort(w.begin(), w.end());
    auto data = cp_action(w);
    CHECK(validate(data).empty());
    for (std::size_t j = 0; j < data.isolated.size(); ++j)
      CHECK(data.isolated[j].sign == (j % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("sphere_action") {
  auto s4 = sphere_action({1, 1});
  REQUIRE(s4.isolated.size() == 2);
  CHECK(s4.isolated[0].exponents == s4.isolated[1].exponents);
  CHECK(s4.isolated[0].sign == -s4.isolated[1].sign);
  CHECK(validate(s4).empty());
  CHECK(validate(sphere_action({2, 3})).empty());
  CHECK_THROWS_AS(sphere_action({0, 1}), std::invalid_argument);
}

TEST_CASE("serialization round trip") {
  auto s4 = sphere_action({1, 1});
  CHECK(same_data(parse_action_data(serialize(s4)), s4));

  std::mt19937 rng(20240602);
  for (int trial = 0; trial < 60; ++trial) {
    auto d = random_valid_data(rng);
    CHECK(same_data(parse_action_data(serialize(d)), d));
  }
}

TEST_CASE("serialization is canonical") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto d = random_valid_data(rng);
    auto shuffled = d;
    std::shuffle(shuffled.isolated.begin(), shuffled.isolated.end(), rng);
    std::shuffle(shuffled.surfaces.begin(), shuffled.surfaces.end(), rng);
    CHECK(serialize(d) == serialize(shuffled));
  }
}

TEST_CASE("parse diagnostics") {
  CHECK_THROWS_AS(parse_action_data("{ not json"), ParseError);
  CHECK_THROWS_WITH(
      parse_action_data(
          R"({"half_dimension":1,"isolated":[{"exponents":[1],"sign":2}]})"),
      Catch::Matchers::ContainsSubstring("sign must be 1 or -1"));
  CHECK_THROWS_AS(
      parse_action_data(
          R"({"half_dimension":3,"isolated":[],"surfaces":[{"genus":0,"normal_euler":1}]})"),
      ValidationError);
  try {
    parse_action_data(
        R"({"half_dimension":3,"surfaces":[{"genus":0,"normal_euler":1}]})");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE(e.violations.size() == 1);
    CHECK(e.violations[0].path == "surfaces");
  }
}

TEST_CASE("external schema example") {
  const std::string doc = R"({"label": "S4-rotation", "half_dimension": 2,
    "isolated": [{"exponents": [1,1], "sign": 1}, {"exponents": [1,1], "sign": -1}],
    "surfaces": [{"genus": 0, "normal_euler": -1, "label": "E"}]})";
  auto d = parse_action_data(doc);
  CHECK(d.label == "S4-rotation");
  CHECK(d.half_dimension == 2);
  CHECK(d.isolated.size() == 2);
  REQUIRE(d.surfaces.size() == 1);
  CHECK(d.surfaces[0].normal_euler == -1);
  CHECK(d.surfaces[0].label == "E");
}
