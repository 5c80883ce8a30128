#include <catch2/catch_amalgamated.hpp>

#include "bott/json_io.hpp"
#include "bott/localize.hpp"
#include "bott/obstruct.hpp"
#include "bott/surgery.hpp"

using namespace bott;

TEST_CASE("check_domain on the paper's catalog") {
  auto k3 = check_domain(catalog("K3"));
  CHECK(k3.admissible == Admissibility::No);
  REQUIRE(k3.violations.size() == 1);
  CHECK(k3.violations[0].condition == "signature=0");
  CHECK(k3.violations[0].anchor == "Theorem 3.3");
  CHECK(k3.violations[0].observed == -16);

  auto cp2 = check_domain(catalog("CP^2"));
  CHECK(cp2.admissible == Admissibility::No);
  bool euler_odd = false;
  for (const auto& v : cp2.violations)
    if (v.condition == "euler even" && v.observed == 3) euler_odd = true;
  CHECK(euler_odd);

  auto t4 = check_domain(catalog("T^4"));
  CHECK(t4.admissible == Admissibility::Yes);
  CHECK(t4.critical_points == Int(0));

  auto sp = check_domain(catalog("S^4xP_2"));
  CHECK(sp.admissible == Admissibility::No);
  REQUIRE_FALSE(sp.violations.empty());
  CHECK(sp.violations[0].condition == "euler=0");
  CHECK(sp.violations[0].observed == -4);

  CHECK_THROWS_AS(check_domain(catalog("S^2")), std::invalid_argument);
}

TEST_CASE("check_domain knowledge handling") {
  ManifoldInvariants unknown4;
  unknown4.dimension = 4;
  CHECK(check_domain(unknown4).admissible == Admissibility::Inconclusive);

  // adding knowledge never turns a block into an admission
  ManifoldInvariants k3 = catalog("K3");
  k3.euler = 24;
  CHECK(check_domain(k3).admissible == Admissibility::No);

  // p_1 alone decides via p_1 = 3*sigma
  ManifoldInvariants p1only;
  p1only.dimension = 4;
  p1only.euler = 4;
  p1only.pontryagin.emplace(Partition{1}, Rational(9));
  auto v = check_domain(p1only);
  CHECK(v.admissible == Admissibility::No);
  CHECK(v.violations[0].observed == 3);

  // inconsistent stored invariants are rejected
  ManifoldInvariants bad;
  bad.dimension = 4;
  bad.signature = 1;
  bad.pontryagin.emplace(Partition{1}, Rational(0));
  CHECK_THROWS_AS(check_domain(bad), std::invalid_argument);

  // unknown Pontryagin entries leave a clean dim>=5 case inconclusive
  ManifoldInvariants m8;
  m8.dimension = 8;
  m8.euler = 0;
  m8.pontryagin.emplace(Partition{2}, Rational(0));
  m8.pontryagin.emplace(Partition{1, 1}, std::nullopt);
  CHECK(check_domain(m8).admissible == Admissibility::Inconclusive);

  CHECK_THROWS_AS(check_domain(ManifoldInvariants{.dimension = 2}),
                  std::invalid_argument);
}

TEST_CASE("catalog") {
  CHECK(catalog("CP^3").euler == Int(4));
  CHECK(catalog("CP^3").dimension == 6);
  CHECK_FALSE(catalog("K3").euler.has_value());
  CHECK(catalog("K3").signature == Int(-16));

  auto cpcp = catalog("CP2#-CP2");
  CHECK(cpcp.signature == Int(0));
  CHECK(cpcp.euler == Int(4));
  CHECK(cpcp.pontryagin.at(Partition{1}) == Rational(0));

  CHECK(catalog("S^6").euler == Int(2));
  CHECK(catalog("T^7").euler == Int(0));
  CHECK(catalog("S^4xP_3").euler == Int(-8));
  CHECK_THROWS_AS(catalog("RP^2"), std::invalid_argument);
}

TEST_CASE("connected-sum combinator") {
  auto cp2 = catalog("CP^2");
  auto sum = combine_connected_sum(cp2, reverse_orientation(cp2));
  CHECK(sum.signature == Int(0));
  CHECK(sum.euler == Int(4));

  auto s4 = catalog("S^4");
  auto with_sphere = combine_connected_sum(cp2, s4);
  CHECK(with_sphere.euler == cp2.euler);
  CHECK(with_sphere.signature == cp2.signature);

  auto k3k3 = combine_connected_sum(catalog("K3"), catalog("K3"));
  CHECK(k3k3.signature == Int(-32));
  CHECK_FALSE(k3k3.euler.has_value());

  CHECK_THROWS_AS(combine_connected_sum(cp2, catalog("S^6")),
                  std::invalid_argument);

  // commutative and associative on fully known invariants
  auto ab = combine_connected_sum(cp2, s4);
  auto ba = combine_connected_sum(s4, cp2);
  CHECK(ab.euler == ba.euler);
  CHECK(ab.signature == ba.signature);
  auto l = combine_connected_sum(combine_connected_sum(cp2, cp2), s4);
  auto r = combine_connected_sum(cp2, combine_connected_sum(cp2, s4));
  CHECK(l.euler == r.euler);
  CHECK(l.signature == r.signature);
  CHECK(l.pontryagin.at(Partition{1}) == r.pontryagin.at(Partition{1}));
}

TEST_CASE("product combinator") {
  auto sp = catalog("S^4xP_2");
  CHECK(sp.dimension == 6);
  CHECK(sp.euler == Int(-4));

  auto t4 = combine_product(catalog("T^3"), catalog("T^1"));
  CHECK(t4.dimension == 4);
  CHECK(t4.euler == Int(0));
  CHECK(t4.signature == Int(0));
  CHECK(t4.pontryagin.at(Partition{1}) == Rational(0));

  auto s2 = catalog("S^2");
  auto s2s2 = combine_product(s2, s2);
  CHECK(s2s2.euler == Int(4));
  CHECK(s2s2.signature == Int(0));

  auto ab = combine_product(s2, catalog("S^4"));
  auto ba = combine_product(catalog("S^4"), s2);
  CHECK(ab.euler == ba.euler);
  CHECK(ab.signature == ba.signature);
}

TEST_CASE("theorem 1.1 data is never blocked in dimension 4") {
  for (const auto& data :
       {sphere_action({1, 1}),
        connected_sum(sphere_action({1, 1}), 0, sphere_action({1, 1}), 1)}) {
    REQUIRE(verify_theorem_1_1(data).pass);
    auto verdict = check_domain(compute_invariants(data));
    CHECK(verdict.admissible != Admissibility::No);
  }
}

TEST_CASE("obstruction verdict JSON shape") {
  auto j = to_json(check_domain(catalog("K3")));
  CHECK(j["admissible"] == "no");
  CHECK(j["critical_points"].is_null());
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["condition"] == "signature=0");
  CHECK(j["violations"][0]["anchor"] == "Theorem 3.3");
  CHECK(j["violations"][0]["observed"] == -16);
}
