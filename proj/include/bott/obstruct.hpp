#pragma once

#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "bott/action_data.hpp"
#include "bott/errors.hpp"
#include "bott/localize.hpp"

// Necessary conditions for a compact oriented manifold to be the domain
// of a non-constant harmonic morphism with one-dimensional fibres, plus
// the invariant combinators and the named-manifold catalog that feed
// them. An "admissible" verdict only means no necessary condition fails.

namespace bott {

enum class Admissibility { Yes, No, Inconclusive };

inline std::string to_string(Admissibility a) {
  switch (a) {
    case Admissibility::Yes: return "yes";
    case Admissibility::No: return "no";
    case Admissibility::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct ObstructionViolation {
  std::string condition;
  std::string anchor;
  Rational observed;
};

struct ObstructionVerdict {
  Admissibility admissible = Admissibility::Inconclusive;
  std::vector<ObstructionViolation> violations;
  std::optional<Int> critical_points;  // 4d only: forced count
};

// Dimension >= 5: every Pontryagin number and the Euler number must
// vanish. Dimension 4: p_1 = 0 (equivalently signature 0), Euler number
// even and nonnegative; when admissible the Euler number is the forced
// number of critical points. Unknown invariants needed for the decision
// give an inconclusive verdict; a single known violation blocks.
inline ObstructionVerdict check_domain(const ManifoldInvariants& inv) {
  if (inv.dimension < 4)
    throw std::invalid_argument(
        "check_domain: only dimensions >= 4 are in scope");
  ObstructionVerdict v;

  if (inv.dimension == 4) {
    std::optional<Rational> p1;
    auto it = inv.pontryagin.find(Partition{1});
    if (it != inv.pontryagin.end() && it->second) p1 = *it->second;
    if (p1 && inv.signature && *p1 != Rational(*inv.signature) * 3)
      throw std::invalid_argument(
          "check_domain: stored p_1 and signature are inconsistent "
          "(p_1 = 3*signature fails)");
    std::optional<Rational> sigma;
    if (inv.signature)
      sigma = Rational(*inv.signature);
    else if (p1)
      sigma = *p1 / 3;

    if (sigma && *sigma != 0)
      v.violations.push_back({"signature=0", "Theorem 3.3", *sigma});
    if (inv.euler) {
      if (*inv.euler % 2 != 0)
        v.violations.push_back(
            {"euler even", "Theorem 3.3", Rational(*inv.euler)});
      if (*inv.euler < 0)
        v.violations.push_back(
            {"euler nonnegative", "Theorem 3.3", Rational(*inv.euler)});
    }
    if (!v.violations.empty()) {
      v.admissible = Admissibility::No;
    } else if (sigma && inv.euler) {
      v.admissible = Admissibility::Yes;
      v.critical_points = *inv.euler;
    }
    return v;
  }

  // dimension >= 5
  if (inv.euler && *inv.euler != 0)
    v.violations.push_back({"euler=0", "Theorem 3.3", Rational(*inv.euler)});
  if (inv.dimension % 4 == 0 && inv.signature && *inv.signature != 0)
    v.violations.push_back(
        {"signature=0", "Theorem 3.3", Rational(*inv.signature)});
  bool all_pontryagin_known = true;
  for (const auto& [I, value] : inv.pontryagin) {
    if (!value) {
      all_pontryagin_known = false;
      continue;
    }
    if (*value != 0)
      v.violations.push_back(
          {"pontryagin[" + I.str() + "]=0", "Theorem 3.3", *value});
  }
  if (inv.dimension % 4 == 0 &&
      inv.pontryagin.size() !=
          partitions_of(inv.dimension / 4).size())
    all_pontryagin_known = false;

  if (!v.violations.empty())
    v.admissible = Admissibility::No;
  else if (inv.euler && all_pontryagin_known)
    v.admissible = Admissibility::Yes;
  return v;
}

// chi unchanged, signature and all Pontryagin numbers negated.
inline ManifoldInvariants reverse_orientation(ManifoldInvariants inv) {
  if (inv.signature) inv.signature = -*inv.signature;
  for (auto& [I, value] : inv.pontryagin)
    if (value) value = -*value;
  if (!inv.label.empty()) inv.label = "-" + inv.label;
  return inv;
}

// sigma additive, chi(A)+chi(B)-2, Pontryagin numbers additive; unknowns
// propagate.
inline ManifoldInvariants combine_connected_sum(const ManifoldInvariants& a,
                                                const ManifoldInvariants& b) {
  if (a.dimension != b.dimension || a.dimension % 2 != 0)
    throw std::invalid_argument(
        "combine_connected_sum: equal even dimensions required");
  ManifoldInvariants out;
  out.dimension = a.dimension;
  out.label = a.label + "#" + b.label;
  if (a.euler && b.euler) out.euler = *a.euler + *b.euler - 2;
  if (a.signature && b.signature) out.signature = *a.signature + *b.signature;
  if (out.dimension % 4 == 0)
    for (const Partition& I : partitions_of(out.dimension / 4)) {
      auto ia = a.pontryagin.find(I);
      auto ib = b.pontryagin.find(I);
      if (ia != a.pontryagin.end() && ia->second && ib != b.pontryagin.end() &&
          ib->second)
        out.pontryagin.emplace(I, *ia->second + *ib->second);
      else
        out.pontryagin.emplace(I, std::nullopt);
    }
  return out;
}

namespace detail {

// Every Pontryagin number known and zero (vacuously true when 4 does not
// divide the dimension), chi = 0, signature absent-or-zero.
inline bool flat_like(const ManifoldInvariants& m) {
  if (!m.euler || *m.euler != 0) return false;
  if (m.signature && *m.signature != 0) return false;
  if (m.dimension % 4 == 0) {
    if (m.pontryagin.size() != partitions_of(m.dimension / 4).size())
      return false;
    for (const auto& [I, value] : m.pontryagin)
      if (!value || *value != 0) return false;
  }
  return true;
}

inline bool all_pontryagin_zero(const ManifoldInvariants& m) {
  if (m.dimension % 4 != 0) return true;
  if (m.pontryagin.size() != partitions_of(m.dimension / 4).size())
    return false;
  for (const auto& [I, value] : m.pontryagin)
    if (!value || *value != 0) return false;
  return true;
}

}  // namespace detail

// Dimension additive, chi multiplicative, signature multiplicative with
// the value 0 in dimensions not divisible by 4. Pontryagin numbers stay
// unknown except over a torus-like factor.
inline ManifoldInvariants combine_product(const ManifoldInvariants& a,
                                          const ManifoldInvariants& b) {
  ManifoldInvariants out;
  out.dimension = a.dimension + b.dimension;
  out.label = a.label + "x" + b.label;
  if (a.euler && b.euler) out.euler = *a.euler * *b.euler;
  if (out.dimension % 4 != 0) {
    out.signature = 0;
  } else if (a.dimension % 4 == 0 && b.dimension % 4 == 0) {
    if (a.signature && b.signature)
      out.signature = *a.signature * *b.signature;
  } else {
    out.signature = 0;  // no factor of dimension divisible by 4
  }
  if (out.dimension % 4 == 0) {
    bool zero = (detail::flat_like(a) && detail::all_pontryagin_zero(b)) ||
                (detail::flat_like(b) && detail::all_pontryagin_zero(a));
    for (const Partition& I : partitions_of(out.dimension / 4))
      out.pontryagin.emplace(
          I, zero ? std::optional<Rational>(Rational(0)) : std::nullopt);
  }
  return out;
}

namespace detail {

inline ManifoldInvariants torus_invariants(long long m) {
  ManifoldInvariants inv;
  inv.dimension = m;
  inv.label = "T^" + std::to_string(m);
  inv.euler = 0;
  inv.signature = 0;
  if (m % 4 == 0)
    for (const Partition& I : partitions_of(m / 4))
      inv.pontryagin.emplace(I, Rational(0));
  return inv;
}

inline ManifoldInvariants sphere_invariants(long long dim) {
  ManifoldInvariants inv;
  inv.dimension = dim;
  inv.label = "S^" + std::to_string(dim);
  inv.euler = 2;
  inv.signature = 0;
  if (dim % 4 == 0)
    for (const Partition& I : partitions_of(dim / 4))
      inv.pontryagin.emplace(I, Rational(0));
  return inv;
}

inline ManifoldInvariants surface_invariants(long long genus) {
  ManifoldInvariants inv;
  inv.dimension = 2;
  inv.label = "P_" + std::to_string(genus);
  inv.euler = 2 - 2 * genus;
  inv.signature = 0;
  return inv;
}

inline ManifoldInvariants cp_invariants(long long n) {
  ManifoldInvariants inv;
  inv.dimension = 2 * n;
  inv.label = "CP^" + std::to_string(n);
  inv.euler = n + 1;
  // Signature and Pontryagin numbers come out of our own localization of
  // the weighted action; beyond the supported L-genus range they stay
  // unknown.
  if (n % 2 == 0 && n <= 10) {
    std::vector<long long> weights(n + 1);
    for (long long j = 0; j <= n; ++j) weights[j] = j;
    ManifoldInvariants loc = compute_invariants(cp_action(weights));
    inv.signature = loc.signature;
    inv.pontryagin = loc.pontryagin;
  }
  return inv;
}

}  // namespace detail

// Named manifolds of the obstruction catalog. Parametrized names:
// "CP^n", "T^m", "S^2n", "S^2nxP_g"; fixed names: "K3", "CP2#-CP2".
inline ManifoldInvariants catalog(const std::string& name) {
  std::smatch m;
  if (name == "K3") {
    ManifoldInvariants inv;
    inv.dimension = 4;
    inv.label = "K3";
    inv.signature = -16;
    return inv;
  }
  if (name == "CP2#-CP2") {
    ManifoldInvariants cp2 = detail::cp_invariants(2);
    ManifoldInvariants out =
        combine_connected_sum(cp2, reverse_orientation(cp2));
    out.label = "CP2#-CP2";
    return out;
  }
  if (std::regex_match(name, m, std::regex(R"(CP\^(\d+))"))) {
    long long n = std::stoll(m[1]);
    if (n < 1) throw std::invalid_argument("catalog: CP^n needs n >= 1");
    return detail::cp_invariants(n);
  }
  if (std::regex_match(name, m, std::regex(R"(T\^(\d+))"))) {
    long long dim = std::stoll(m[1]);
    if (dim < 1) throw std::invalid_argument("catalog: T^m needs m >= 1");
    return detail::torus_invariants(dim);
  }
  if (std::regex_match(name, m, std::regex(R"(S\^(\d+)xP_(\d+))"))) {
    long long dim = std::stoll(m[1]);
    long long g = std::stoll(m[2]);
    if (dim < 2 || dim % 2 != 0)
      throw std::invalid_argument("catalog: S^2nxP_g needs even 2n >= 2");
    ManifoldInvariants out = combine_product(detail::sphere_invariants(dim),
                                             detail::surface_invariants(g));
    out.label = "S^" + std::to_string(dim) + "xP_" + std::to_string(g);
    return out;
  }
  if (std::regex_match(name, m, std::regex(R"(S\^(\d+))"))) {
    long long dim = std::stoll(m[1]);
    if (dim < 2 || dim % 2 != 0)
      throw std::invalid_argument("catalog: S^2n needs even 2n >= 2");
    return detail::sphere_invariants(dim);
  }
  throw std::invalid_argument("catalog: unknown manifold name '" + name + "'");
}

// The names `catalog` accepts, for listings.
inline std::vector<std::string> catalog_names() {
  return {"CP^n (e.g. CP^2)", "K3", "S^2nxP_g (e.g. S^4xP_2)",
          "T^m (e.g. T^4)", "S^2n (e.g. S^4)", "CP2#-CP2"};
}

}  // namespace bott
