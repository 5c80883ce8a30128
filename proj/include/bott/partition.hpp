#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bott/errors.hpp"

namespace bott {

// A partition of a positive integer: weakly decreasing nonempty list of
// positive parts. Partitions order themselves lexicographically
// descending, i.e. (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1), which is
// the order partitions_of emits and the order reports iterate in.
class Partition {
 public:
  explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
      throw std::invalid_argument("Partition: parts must be nonempty");
    for (long long p : parts_)
      if (p < 1) throw std::invalid_argument("Partition: every part must be >= 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<long long>());
  }

  Partition(std::initializer_list<long long> parts)
      : Partition(std::vector<long long>(parts)) {}

  const std::vector<long long>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }

  long long weight() const {
    long long w = 0;
    for (long long p : parts_) w += p;
    return w;
  }

  // "2,1,1"
  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ',';
      os << parts_[i];
    }
    return os.str();
  }

  static Partition from_string(const std::string& s) {
    std::vector<long long> parts;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        parts.push_back(std::stoll(tok));
      } catch (const std::exception&) {
        throw ParseError("bad partition part: '" + tok + "'");
      }
    }
    if (parts.empty()) throw ParseError("empty partition string");
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  // Lexicographic-descending enumeration order.
  friend bool operator<(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                        a.parts_.begin(), a.parts_.end());
  }

 private:
  std::vector<long long> parts_;
};

namespace detail {
inline void partitions_rec(long long remaining, long long max_part,
                           std::vector<long long>& prefix,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (long long p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

// All partitions of p in lexicographic descending order.
inline std::vector<Partition> partitions_of(long long p) {
  if (p <= 0) throw std::invalid_argument("partitions_of: p must be >= 1");
  std::vector<Partition> out;
  std::vector<long long> prefix;
  detail::partitions_rec(p, p, prefix, out);
  return out;
}

}  // namespace bott
