#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bott/localize.hpp"
#include "bott/surgery.hpp"

using namespace bott;

TEST_CASE("connected sum of spheres") {
  auto a = sphere_action({1, 1});
  auto b = sphere_action({1, 1});
  auto sum = connected_sum(a, 0, b, 1);  // +pole of a to -pole of b... signs
  REQUIRE(sum.isolated.size() == 2);
  CHECK(euler_number(sum) == 2);
  CHECK(signature(sum).value == 0);
  CHECK(pontryagin_number(sum, Partition{1}) == 0);
  CHECK(validate(sum).empty());

  CHECK_THROWS_AS(connected_sum(a, 0, b, 0), HypothesisError);  // both +
  CHECK_THROWS_AS(connected_sum(a, 0, sphere_action({1, 2}), 1),
                  HypothesisError);  // exponent mismatch
  CHECK_THROWS_AS(connected_sum(a, 0, sphere_action({1, 1, 1}), 1),
                  std::invalid_argument);  // dimension mismatch
  CHECK_THROWS_AS(connected_sum(a, 5, b, 0), std::invalid_argument);
}

TEST_CASE("connected sum accepts permuted exponents") {
  auto a = cp_action({0, 1, 2});  // point 0 has exponents (1,2), sign +
  // partner with exponent multiset {2,1} and sign -1: reverse-orient a copy
  auto arev = a;
  for (auto& pt : arev.isolated) pt.sign = -pt.sign;
  auto sum = connected_sum(a, 0, arev, 2);  // (1,2),+ against (2,1),-
  CHECK(validate(sum).empty());
  CHECK(euler_number(sum) == 4);
  CHECK(signature(sum).value == 0);  // CP^2 # -CP^2
}

TEST_CASE("blow-up, equal-exponent regime") {
  auto s4 = sphere_action({1, 1});
  auto blown = blow_up(s4, 0);
  REQUIRE(blown.isolated.size() == 1);
  REQUIRE(blown.surfaces.size() == 1);
  CHECK(blown.surfaces[0].genus == 0);
  CHECK(blown.surfaces[0].normal_euler == -1);
  CHECK(euler_number(blown) == 3);
  CHECK(signature(blown).value == -1);
  CHECK(verify_theorem_2_8(blown).pass);

  auto twice = blow_up(blown, 0);
  CHECK(twice.isolated.empty());
  REQUIRE(twice.surfaces.size() == 2);
  CHECK(euler_number(twice) == 4);
  CHECK(signature(twice).value == 0);

  auto mm = blow_up(sphere_action({3, 3}), 1);
  CHECK(mm.surfaces.at(0).normal_euler == 1);
}

TEST_CASE("blow-up, distinct-exponent regime") {
  auto cp3 = cp_action({0, 1, 2, 3});
  auto blown = blow_up(cp3, 0);  // exponents (1,2,3), sign +
  CHECK(blown.isolated.size() == 6);
  CHECK(euler_number(blown) == 6);
  CHECK(vanishing_sum(blown, {}) == 0);
  CHECK(vanishing_sum(blown, {1}) == 0);
  CHECK(signature(blown).value == 0);
  CHECK(validate(blown).empty());

  // dimension 4 with distinct exponents stays in the isolated model
  auto cp2 = cp_action({0, 1, 3});
  auto blown4 = blow_up(cp2, 0);  // exponents (1,3), sign +
  CHECK(blown4.surfaces.empty());
  CHECK(blown4.isolated.size() == 4);
  CHECK(euler_number(blown4) == 4);
  CHECK(signature(blown4).value == 0);  // CP^2 # -CP^2
}

TEST_CASE("blow-up refusals") {
  CHECK_THROWS_AS(blow_up(sphere_action({2, 2, 2}), 0), UnsupportedDataError);
  CircleActionData d;
  d.half_dimension = 3;
  d.isolated.push_back({{1, 2, 2}, 1});
  d.isolated.push_back({{1, 2, 2}, -1});
  CHECK_THROWS_AS(blow_up(d, 0), UnsupportedDataError);
  CHECK_THROWS_AS(blow_up(d, 7), std::invalid_argument);
}

TEST_CASE("bookkeeping") {
  auto s4 = sphere_action({1, 1});
  auto blown = blow_up(s4, 0);
  SurgeryOp op;
  op.kind = SurgeryOp::Kind::BlowUp;
  op.index = 0;
  auto rep = bookkeeping(s4, blown, op);
  CHECK(rep.consistent);
  CHECK(rep.predicted_euler == Int(3));
  CHECK(rep.predicted_sigma == Int(-1));
  CHECK(rep.after.sigma == Int(-1));

  auto b = sphere_action({1, 1});
  auto sum = connected_sum(s4, 0, b, 1);
  SurgeryOp cop;
  cop.kind = SurgeryOp::Kind::ConnectedSum;
  cop.second = b;
  auto crep = bookkeeping(s4, sum, cop);
  CHECK(crep.consistent);
  CHECK(crep.predicted_euler == Int(2));
  CHECK(crep.predicted_sigma == Int(0));

  // double blow-up of S^4 at both poles equals S^2 x S^2 invariants
  auto twice = blow_up(blown, 0);
  CHECK(euler_number(twice) == 4);
  CHECK(signature(twice).value == 0);
}

TEST_CASE("random surgery closure keeps data valid and consistent") {
  std::mt19937 rng(20240603);
  std::vector<CircleActionData> pool{sphere_action({1, 1}),
                                     sphere_action({2, 2}),
                                     sphere_action({3, 3})};
  std::uniform_int_distribution<int> coin(0, 1);
  for (int step = 0; step < 60; ++step) {
    auto pick = [&](std::size_t bound) {
      return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
    };
    const auto& d = pool[pick(pool.size())];
    CircleActionData out;
    if (coin(rng) == 0 && !d.isolated.empty()) {
      out = blow_up(d, pick(d.isolated.size()));
    } else {
      const auto& e = pool[pick(pool.size())];
      bool found = false;
      for (std::size_t i = 0; i < d.isolated.size() && !found; ++i)
        for (std::size_t j = 0; j < e.isolated.size() && !found; ++j) {
          auto si = d.isolated[i].exponents, sj = e.isolated[j].exponents;
          std::sort(si.begin(), si.end());
          std::sort(sj.begin(), sj.end());
          if (si == sj && d.isolated[i].sign == -e.isolated[j].sign) {
            out = connected_sum(d, i, e, j);
            found = true;
          }
        }
      if (!found) continue;
    }
    CHECK(validate(out).empty());
    auto v = verify_theorem_2_8(out);
    if (v.applicable) CHECK(v.pass);
    pool.push_back(out);
  }
}
