#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bott/action_data.hpp"
#include "bott/errors.hpp"
#include "bott/partition.hpp"
#include "bott/pontryagin_poly.hpp"
#include "bott/rational.hpp"

// Localization of characteristic numbers at fixed-point data. The global
// normalization is fixed by the convention p_1[CP^2] = +3 (weights 0,1,2);
// every sum here is sign(x) * f(m_1^2,...,m_n^2) / (m_1*...*m_n) with f a
// product of elementary symmetric functions.

namespace bott {

namespace detail {

// sign(x) * prod_k e_{parts[k]}(m^2) / prod_j m_j for one fixed point.
inline Rational point_term(const IsolatedFixedPoint& pt,
                           const std::vector<long long>& parts) {
  std::vector<Rational> squares;
  Rational denom(1);
  for (long long m : pt.exponents) {
    squares.emplace_back(Int(m) * Int(m));
    denom *= Rational(m);
  }
  Rational num(pt.sign);
  for (long long k : parts)
    num *= elementary_symmetric(static_cast<std::size_t>(k), squares);
  return num / denom;
}

inline void require_valid(const CircleActionData& data) {
  auto v = validate(data);
  if (!v.empty())
    throw std::invalid_argument("invalid action data: " + v.front().path +
                                ": " + v.front().message);
}

inline bool equal_exponents(const IsolatedFixedPoint& pt) {
  for (long long m : pt.exponents)
    if (m != pt.exponents.front()) return false;
  return true;
}

}  // namespace detail

// The localized sum for an invariant monomial f = prod e_{parts[k]}(m^2)
// of degree below the critical one; empty `parts` means f = 1. Zero for
// every dataset arising from a genuine action.
inline Rational vanishing_sum(const CircleActionData& data,
                              const std::vector<long long>& monomial_parts) {
  detail::require_valid(data);
  if (!data.surfaces.empty())
    throw UnsupportedDataError(
        "vanishing_sum: datasets with surface components are not supported");
  long long weight = 0;
  for (long long k : monomial_parts) {
    if (k < 1 || k > data.half_dimension)
      throw std::invalid_argument("vanishing_sum: monomial index out of range");
    weight += k;
  }
  if (2 * weight >= data.half_dimension)
    throw std::invalid_argument(
        "vanishing_sum: monomial degree too large; use pontryagin_number");
  Rational sum(0);
  for (const auto& pt : data.isolated)
    sum += detail::point_term(pt, monomial_parts);
  return sum;
}

// The Pontryagin number p_I, I a partition of n/2 (n even). In dimension
// 4 mixed data contributes the normal Euler number of each surface.
inline Rational pontryagin_number(const CircleActionData& data,
                                  const Partition& I) {
  detail::require_valid(data);
  const long long n = data.half_dimension;
  if (n % 2 != 0 || I.weight() != n / 2)
    throw std::invalid_argument(
        "pontryagin_number: partition weight must equal half_dimension/2");
  if (!data.surfaces.empty() && n != 2)
    throw UnsupportedDataError(
        "pontryagin_number: surface components only supported in dimension 4");
  Rational sum(0);
  for (const auto& pt : data.isolated)
    sum += detail::point_term(pt, I.parts());
  for (const auto& s : data.surfaces) sum += Rational(s.normal_euler);
  return sum;
}

// chi(M) = chi(F): one per isolated point plus 2 - 2g per surface.
inline Int euler_number(const CircleActionData& data) {
  detail::require_valid(data);
  Int chi = static_cast<long long>(data.isolated.size());
  for (const auto& s : data.surfaces) chi += 2 - 2 * s.genus;
  return chi;
}

enum class SignatureMethod { TrivialDimension, LGenus, EqualExponents4d };

inline std::string to_string(SignatureMethod m) {
  switch (m) {
    case SignatureMethod::TrivialDimension: return "trivial-dimension";
    case SignatureMethod::LGenus: return "L-genus";
    case SignatureMethod::EqualExponents4d: return "theorem-2.8";
  }
  return "?";
}

struct SignatureResult {
  Int value;
  SignatureMethod method;
};

// Signature from fixed-point data. Dimension not divisible by 4: zero.
// No surfaces: L-genus evaluated at the localized Pontryagin numbers.
// Dimension 4 with surfaces and equal exponents at every isolated point:
// sum of signs, cross-checked against the normal Euler numbers and
// p_1/3; a mismatch means the data is unrealizable.
inline SignatureResult signature(const CircleActionData& data) {
  detail::require_valid(data);
  const long long n = data.half_dimension;
  if (n % 2 != 0) return {Int(0), SignatureMethod::TrivialDimension};

  if (data.surfaces.empty()) {
    const long long k = n / 2;
    PontryaginPolynomial L = l_genus(k);
    std::map<Partition, Rational> values;
    for (const Partition& I : partitions_of(k))
      values.emplace(I, pontryagin_number(data, I));
    Rational sigma = evaluate(L, values);
    if (!is_integer(sigma))
      throw RealizabilityError(
          "signature: L-genus evaluates to the non-integer " + sigma.str() +
          "; data not realizable by a circle action");
    return {to_integer(sigma), SignatureMethod::LGenus};
  }

  // n == 2 is enforced by validate when surfaces are present.
  for (const auto& pt : data.isolated)
    if (!detail::equal_exponents(pt))
      throw UnsupportedDataError(
          "signature: mixed 4d data requires equal exponents at every "
          "isolated fixed point");
  Int sign_sum = 0;
  for (const auto& pt : data.isolated) sign_sum += pt.sign;
  Int normal_sum = 0;
  for (const auto& s : data.surfaces) normal_sum += s.normal_euler;
  Rational p1 = pontryagin_number(data, Partition{1});
  if (sign_sum != normal_sum || Rational(sign_sum) * 3 != p1)
    throw RealizabilityError(
        "signature: data not realizable by a circle action (Theorem 2.8 "
        "violated)");
  return {sign_sum, SignatureMethod::EqualExponents4d};
}

struct Theorem11Verdict {
  bool applicable = false;
  bool pass = false;
  std::string reason;  // set when inapplicable or failing
  Int sign_sum = 0;
  Int euler = 0;
  Int isolated_count = 0;
  std::map<Partition, Rational> pontryagin;
};

// Isolated-singularity case: all exponents 1, no surfaces. The verdict
// checks sum of signs = 0, every Pontryagin number = 0, and Euler number
// even and equal to the number of fixed points.
inline Theorem11Verdict verify_theorem_1_1(const CircleActionData& data) {
  detail::require_valid(data);
  Theorem11Verdict v;
  if (!data.surfaces.empty()) {
    v.reason = "inapplicable: surface components present";
    return v;
  }
  for (const auto& pt : data.isolated)
    for (long long m : pt.exponents)
      if (m != 1) {
        v.reason = "inapplicable: an exponent differs from 1";
        return v;
      }
  v.applicable = true;
  for (const auto& pt : data.isolated) v.sign_sum += pt.sign;
  v.isolated_count = static_cast<long long>(data.isolated.size());
  v.euler = euler_number(data);
  const long long n = data.half_dimension;
  if (n % 2 == 0)
    for (const Partition& I : partitions_of(n / 2))
      v.pontryagin.emplace(I, pontryagin_number(data, I));
  v.pass = v.sign_sum == 0 && v.euler % 2 == 0 && v.euler == v.isolated_count;
  for (const auto& [I, p] : v.pontryagin)
    if (p != 0) v.pass = false;
  if (!v.pass) v.reason = "fixed-point data violates the theorem's conclusions";
  return v;
}

struct Theorem28Verdict {
  bool applicable = false;
  bool pass = false;
  std::string reason;
  Rational p1_third;    // p_1 / 3
  Int sign_sum = 0;     // sum over isolated points
  Int normal_sum = 0;   // sum of normal Euler numbers
};

// Dimension-4 case with equal exponents at every isolated point: the
// signature candidates p_1/3, sum of signs, and total normal Euler
// number must coincide.
inline Theorem28Verdict verify_theorem_2_8(const CircleActionData& data) {
  detail::require_valid(data);
  Theorem28Verdict v;
  if (data.half_dimension != 2) {
    v.reason = "inapplicable: requires dimension 4";
    return v;
  }
  for (const auto& pt : data.isolated)
    if (!detail::equal_exponents(pt)) {
      v.reason = "inapplicable: an isolated point has unequal exponents";
      return v;
    }
  v.applicable = true;
  for (const auto& pt : data.isolated) v.sign_sum += pt.sign;
  for (const auto& s : data.surfaces) v.normal_sum += s.normal_euler;
  v.p1_third = pontryagin_number(data, Partition{1}) / 3;
  v.pass = Rational(v.sign_sum) == v.p1_third && v.sign_sum == v.normal_sum;
  if (!v.pass) v.reason = "the three signature expressions disagree";
  return v;
}

// Full invariant report of the manifold the data describes. Signature
// errors (unrealizable or unsupported data) propagate to the caller.
inline ManifoldInvariants compute_invariants(const CircleActionData& data) {
  detail::require_valid(data);
  ManifoldInvariants inv;
  inv.dimension = data.dimension();
  inv.label = data.label;
  inv.euler = euler_number(data);
  const long long n = data.half_dimension;
  if (n % 2 == 0)
    for (const Partition& I : partitions_of(n / 2))
      inv.pontryagin.emplace(I, pontryagin_number(data, I));
  inv.signature = signature(data).value;
  return inv;
}

}  // namespace bott
