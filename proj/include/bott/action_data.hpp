#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bott/errors.hpp"
#include "bott/partition.hpp"
#include "bott/rational.hpp"

namespace bott {

// One isolated fixed point of a circle action on a 2n-manifold: the n
// positive rotation exponents of the linearized action and the +-1
// orientation sign.
struct IsolatedFixedPoint {
  std::vector<long long> exponents;
  int sign = 1;

  friend bool operator==(const IsolatedFixedPoint&,
                         const IsolatedFixedPoint&) = default;
};

// A 2-dimensional fixed component in a 4-manifold.
struct SurfaceComponent {
  long long genus = 0;
  long long normal_euler = 0;  // Euler number of the normal bundle
  std::string label;

  friend bool operator==(const SurfaceComponent&,
                         const SurfaceComponent&) = default;
};

// Complete fixed-point description of a circle action on a closed
// oriented 2n-manifold. Fixed points form an unordered multiset;
// canonicalize() imposes the order serialization uses.
struct CircleActionData {
  long long half_dimension = 1;  // n; the manifold has dimension 2n
  std::vector<IsolatedFixedPoint> isolated;
  std::vector<SurfaceComponent> surfaces;
  std::string label;

  long long dimension() const { return 2 * half_dimension; }
};

struct Violation {
  std::string path;
  std::string message;
};

// Empty result iff all type invariants hold. Never throws.
inline std::vector<Violation> validate(const CircleActionData& data) {
  std::vector<Violation> v;
  if (data.half_dimension < 1)
    v.push_back({"half_dimension", "half_dimension must be >= 1"});
  for (std::size_t i = 0; i < data.isolated.size(); ++i) {
    const auto& pt = data.isolated[i];
    const std::string path = "isolated[" + std::to_string(i) + "]";
    if (static_cast<long long>(pt.exponents.size()) != data.half_dimension)
      v.push_back({path + ".exponents",
                   "exponent list length must equal half_dimension"});
    for (long long m : pt.exponents)
      if (m < 1) {
        v.push_back({path + ".exponents", "exponents must be positive"});
        break;
      }
    if (pt.sign != 1 && pt.sign != -1)
      v.push_back({path + ".sign", "sign must be 1 or -1"});
  }
  if (!data.surfaces.empty() && data.half_dimension != 2)
    v.push_back({"surfaces", "surfaces require dimension 4"});
  for (std::size_t i = 0; i < data.surfaces.size(); ++i)
    if (data.surfaces[i].genus < 0)
      v.push_back({"surfaces[" + std::to_string(i) + "].genus",
                   "genus must be nonnegative"});
  return v;
}

// Sorts fixed points and surfaces into the canonical serialization order.
inline CircleActionData canonicalize(CircleActionData data) {
  std::sort(data.isolated.begin(), data.isolated.end(),
            [](const IsolatedFixedPoint& a, const IsolatedFixedPoint& b) {
              return std::tie(a.exponents, a.sign) <
                     std::tie(b.exponents, b.sign);
            });
  std::sort(data.surfaces.begin(), data.surfaces.end(),
            [](const SurfaceComponent& a, const SurfaceComponent& b) {
              return std::tie(a.genus, a.normal_euler, a.label) <
                     std::tie(b.genus, b.normal_euler, b.label);
            });
  return data;
}

// Multiset equality of fixed-point data (labels included).
inline bool same_data(const CircleActionData& a, const CircleActionData& b) {
  CircleActionData ca = canonicalize(a), cb = canonicalize(b);
  return ca.half_dimension == cb.half_dimension && ca.label == cb.label &&
         ca.isolated == cb.isolated && ca.surfaces == cb.surfaces;
}

// The weighted linear action on CP^n given by n+1 pairwise-distinct
// integer weights: fixed point j has exponents |a_k - a_j| (k != j) and
// sign prod_{k != j} sign(a_k - a_j).
inline CircleActionData cp_action(const std::vector<long long>& weights) {
  if (weights.size() < 2)
    throw std::invalid_argument("cp_action: need at least two weights");
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (std::size_t j = i + 1; j < weights.size(); ++j)
      if (weights[i] == weights[j])
        throw std::invalid_argument(
            "cp_action: repeated weights give a positive-dimensional fixed "
            "set; use blow_up semantics instead");

  CircleActionData data;
  data.half_dimension = static_cast<long long>(weights.size()) - 1;
  data.label = "CP^" + std::to_string(data.half_dimension);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    IsolatedFixedPoint pt;
    pt.sign = 1;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      if (k == j) continue;
      long long d = weights[k] - weights[j];
      pt.exponents.push_back(d > 0 ? d : -d);
      if (d < 0) pt.sign = -pt.sign;
    }
    data.isolated.push_back(std::move(pt));
  }
  return data;
}

// Rotation action on S^{2n}: two poles with identical exponents and
// opposite signs.
inline CircleActionData sphere_action(const std::vector<long long>& exponents) {
  if (exponents.empty())
    throw std::invalid_argument("sphere_action: need at least one exponent");
  for (long long m : exponents)
    if (m < 1)
      throw std::invalid_argument("sphere_action: exponents must be positive");
  CircleActionData data;
  data.half_dimension = static_cast<long long>(exponents.size());
  data.label = "S^" + std::to_string(2 * data.half_dimension);
  data.isolated.push_back({exponents, +1});
  data.isolated.push_back({exponents, -1});
  return data;
}

// Invariants of a closed oriented manifold; fields may be unknown.
// Pontryagin numbers are indexed by partitions of dimension/4.
struct ManifoldInvariants {
  long long dimension = 0;
  std::optional<Int> euler;
  std::optional<Int> signature;
  std::map<Partition, std::optional<Rational>> pontryagin;
  std::string label;
};

}  // namespace bott
