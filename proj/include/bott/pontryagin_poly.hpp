#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bott/errors.hpp"
#include "bott/partition.hpp"
#include "bott/rational.hpp"

namespace bott {

// e_k of the given values; e_0 = 1.
inline Rational elementary_symmetric(std::size_t k,
                                     const std::vector<Rational>& values) {
  if (k > values.size())
    throw std::invalid_argument("elementary_symmetric: k out of range");
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = 1;
  for (const Rational& v : values)
    for (std::size_t j = std::min(k, e.size() - 1); j >= 1; --j)
      e[j] += v * e[j - 1];
  return e[k];
}

// Homogeneous polynomial in the Pontryagin classes p_i: a map from the
// monomial p_{i_1}...p_{i_r} (as a partition) to its coefficient. Every
// key has weight equal to `degree`.
struct PontryaginPolynomial {
  long long degree = 0;
  std::map<Partition, Rational> terms;

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [part, coeff] : terms) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff.str() << ")*p[" << part.str() << "]";
    }
    return first ? "0" : os.str();
  }
};

// Substitutes a value for every monomial of poly. Missing assignments
// propagate as UnknownValueError, never as a guessed zero.
inline Rational evaluate(const PontryaginPolynomial& poly,
                         const std::map<Partition, Rational>& values) {
  Rational sum(0);
  for (const auto& [part, coeff] : poly.terms) {
    auto it = values.find(part);
    if (it == values.end())
      throw UnknownValueError("evaluate: no value assigned for monomial p[" +
                              part.str() + "]");
    sum += coeff * it->second;
  }
  return sum;
}

namespace detail {

// Dense power series in one variable, index = exponent.
using Series = std::vector<Rational>;

inline Series series_div(const Series& a, const Series& b, std::size_t order) {
  Series c(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order; ++i) {
    Rational acc = i < a.size() ? a[i] : Rational(0);
    for (std::size_t j = 1; j <= i && j < b.size(); ++j) acc -= b[j] * c[i - j];
    c[i] = acc / b[0];
  }
  return c;
}

// log of a series with constant term 1, via integrating q'/q.
inline Series series_log(const Series& q, std::size_t order) {
  Series d(order + 1, Rational(0));
  for (std::size_t i = 0; i < order; ++i)
    d[i] = (i + 1 < q.size()) ? Rational(i + 1) * q[i + 1] : Rational(0);
  Series r = series_div(d, q, order);
  Series l(order + 1, Rational(0));
  for (std::size_t i = 1; i <= order; ++i) l[i] = r[i - 1] / Rational(i);
  return l;
}

// x/tanh(x) as a series in t = x^2, to the given order:
// cosh = sum t^i/(2i)!, sinh/x = sum t^i/(2i+1)!.
inline Series x_over_tanh_series(std::size_t order) {
  Series num(order + 1), den(order + 1);
  Int fact = 1;
  for (std::size_t i = 0; i <= order; ++i) {
    if (i > 0) fact *= Int(2 * i - 1) * Int(2 * i);
    num[i] = Rational(1) / Rational(fact);
    den[i] = Rational(1) / Rational(fact * Int(2 * i + 1));
  }
  return series_div(num, den, order);
}

// Graded polynomial in the elementary symmetric generators e_1, e_2, ...
// Key: the multiset of e-indices of a monomial, sorted descending; the
// empty key is the constant term.
using EPoly = std::map<std::vector<long long>, Rational>;

inline long long eweight(const std::vector<long long>& key) {
  long long w = 0;
  for (long long i : key) w += i;
  return w;
}

inline EPoly emul(const EPoly& a, const EPoly& b, long long max_weight) {
  EPoly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      if (eweight(ka) + eweight(kb) > max_weight) continue;
      std::vector<long long> key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      std::sort(key.begin(), key.end(), std::greater<long long>());
      out[key] += ca * cb;
    }
  return out;
}

// Power sum P_r in the e_i, by Newton's identities.
inline EPoly power_sum(long long r) {
  std::vector<EPoly> P(r + 1);
  for (long long s = 1; s <= r; ++s) {
    EPoly acc;
    Rational sign(1);
    for (long long i = 1; i < s; ++i) {
      EPoly ei;
      ei[{i}] = sign;
      for (const auto& [k, c] : emul(ei, P[s - i], s)) acc[k] += c;
      sign = -sign;
    }
    acc[{s}] += sign * Rational(s);
    P[s] = std::move(acc);
  }
  return P[r];
}

}  // namespace detail

// The k-th Hirzebruch L-polynomial, generated from the multiplicative
// sequence of x/tanh(x): take log of the generating series, express the
// resulting power sums in the e_i via Newton's identities, exponentiate
// in graded truncation, and read off the weight-k part with e_i -> p_i.
inline PontryaginPolynomial l_genus(long long k) {
  if (k < 1 || k > 5)
    throw std::invalid_argument("l_genus: k must be in 1..5");
  const std::size_t order = static_cast<std::size_t>(k);
  detail::Series logq = detail::series_log(detail::x_over_tanh_series(order), order);

  detail::EPoly G;
  for (long long r = 1; r <= k; ++r) {
    if (logq[r] == 0) continue;
    for (const auto& [key, c] : detail::power_sum(r)) G[key] += logq[r] * c;
  }

  // exp(G), truncated at weight k.
  detail::EPoly expG;
  expG[{}] = Rational(1);
  detail::EPoly term = expG;
  for (long long s = 1; s <= k; ++s) {
    term = detail::emul(term, G, k);
    for (auto& [key, c] : term) c /= Rational(s);
    for (const auto& [key, c] : term) expG[key] += c;
  }

  PontryaginPolynomial L;
  L.degree = k;
  for (const auto& [key, c] : expG) {
    if (detail::eweight(key) != k || c == 0) continue;
    L.terms.emplace(Partition(key), c);
  }
  return L;
}

}  // namespace bott
