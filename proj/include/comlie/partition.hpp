#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace comlie {

/// An integer partition stored with parts in nonincreasing order.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("partition parts must be positive");
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
      throw std::invalid_argument("partition parts must be nonincreasing");
  }

  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// part size -> multiplicity
  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  /// Conjugate (transposed) partition.
  Partition conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
      for (int j = 1; j <= parts_.front(); ++j) {
        int count = 0;
        for (int p : parts_)
          if (p >= j) ++count;
        c.push_back(count);
      }
    }
    return Partition(std::move(c));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace detail

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...,
/// (1,...,1). partitions(0) is the single empty partition.
inline std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  detail::partitions_rec(n, n, current, out);
  return out;
}

}  // namespace comlie
