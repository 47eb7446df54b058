#pragma once

// Type A model of the poset of intersections of maximal tori in U(n).
// Components are indexed by partitions of n. Chains of torus intersections
// are refinement chains of set partitions of {1..n}, taken up to S_n.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"
#include "qseries.hpp"
#include "weyl.hpp"

namespace comlie {

/// One component Fl(lambda)/S_lambda.
struct ToriComponent {
  Partition lambda;
  QPoly flag_poincare;  // in q = t^2
  int real_dimension = 0;
  long stabilizer_order = 1;
};

inline ToriComponent tori_component(const Partition& lambda) {
  ToriComponent c;
  c.lambda = lambda;
  QPoly denominator(1);
  int sum_sq = 0;
  for (int p : lambda.parts()) {
    denominator = denominator * q_factorial(p);
    sum_sq += p * p;
  }
  const int n = lambda.size();
  c.flag_poincare = divide_exact(q_factorial(n), denominator);
  c.real_dimension = n * n - sum_sq;
  for (const auto& [part, mult] : lambda.multiplicities())
    for (int k = 2; k <= mult; ++k) c.stabilizer_order *= k;
  return c;
}

inline std::vector<ToriComponent> components(int n) {
  if (n < 1) throw std::invalid_argument("components: n must be >= 1");
  std::vector<ToriComponent> out;
  for (const auto& lambda : partitions(n)) out.push_back(tori_component(lambda));
  return out;
}

/// Set partition of {1..n} as a restricted growth string: label[i] is the
/// block of element i+1, blocks numbered in order of their minimum element.
class SetPartition {
 public:
  SetPartition() = default;
  explicit SetPartition(std::vector<int> labels) : labels_(std::move(labels)) {
    int next = 0;
    for (int l : labels_) {
      if (l < 0 || l > next) throw std::invalid_argument("SetPartition: not a restricted growth string");
      if (l == next) ++next;
    }
    num_blocks_ = next;
  }

  /// Relabels arbitrary block ids into restricted growth form.
  static SetPartition normalized(const std::vector<int>& ids) {
    std::map<int, int> rename;
    std::vector<int> labels;
    labels.reserve(ids.size());
    for (int id : ids) labels.push_back(rename.try_emplace(id, static_cast<int>(rename.size())).first->second);
    return SetPartition(std::move(labels));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  int num_blocks() const { return num_blocks_; }
  const std::vector<int>& labels() const { return labels_; }

  /// Blocks sorted by minimum element, elements 1-based and ascending.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(num_blocks_));
    for (std::size_t i = 0; i < labels_.size(); ++i) out[static_cast<std::size_t>(labels_[i])].push_back(static_cast<int>(i) + 1);
    return out;
  }

  /// True if every block of *this lies inside a block of coarser.
  bool refines(const SetPartition& coarser) const {
    if (coarser.size() != size()) return false;
    std::vector<int> image(static_cast<std::size_t>(num_blocks_), -1);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      int& slot = image[static_cast<std::size_t>(labels_[i])];
      if (slot < 0) slot = coarser.labels_[i];
      else if (slot != coarser.labels_[i]) return false;
    }
    return true;
  }

  /// Image under w: element w(i) goes where i was.
  SetPartition act(const Permutation& w) const {
    std::vector<int> ids(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i)
      ids[static_cast<std::size_t>(w(static_cast<int>(i) + 1) - 1)] = labels_[i];
    return normalized(ids);
  }

  /// e.g. "{1,3|2}"
  std::string to_string() const {
    std::string s = "{";
    const auto bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
      if (b) s += '|';
      for (std::size_t k = 0; k < bs[b].size(); ++k) s += (k ? "," : "") + std::to_string(bs[b][k]);
    }
    return s + "}";
  }

  bool operator==(const SetPartition&) const = default;
  auto operator<=>(const SetPartition&) const = default;

 private:
  std::vector<int> labels_;
  int num_blocks_ = 0;
};

/// All set partitions of {1..n} with the given number of blocks.
inline std::vector<SetPartition> set_partitions(int n, int blocks) {
  std::vector<SetPartition> out;
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (n - i < blocks - used) return;
    if (i == n) {
      if (used == blocks) out.emplace_back(labels);
      return;
    }
    for (int l = 0; l <= used && l < blocks; ++l) {
      labels[static_cast<std::size_t>(i)] = l;
      rec(i + 1, l == used ? used + 1 : used);
    }
  };
  rec(0, 0);
  return out;
}

using PartitionChain = std::vector<SetPartition>;

/// An S_n-orbit of refinement chains pi_0 >= pi_1 >= ... (pi_{r+1} refines pi_r).
struct ChainClass {
  PartitionChain representative;
  std::vector<int> block_counts;
  std::size_t orbit_size = 0;
};

/// Largest n accepted by chain enumeration.
inline constexpr int kMaxChainRank = 8;

namespace detail {

inline std::vector<int> chain_block_counts(int n, const std::vector<int>& ivals) {
  if (ivals.empty()) throw std::invalid_argument("chain_classes: ivals must be nonempty");
  if (n < 1) throw std::invalid_argument("chain_classes: n must be >= 1");
  if (n > kMaxChainRank) throw SizeError("chain_classes: n exceeds " + std::to_string(kMaxChainRank));
  std::vector<int> counts;
  for (std::size_t r = 0; r < ivals.size(); ++r) {
    if (ivals[r] < 0 || ivals[r] > n - 1) throw std::invalid_argument("chain_classes: value out of range 0..n-1");
    if (r > 0 && ivals[r] <= ivals[r - 1]) throw std::invalid_argument("chain_classes: values must be strictly increasing");
    counts.push_back(ivals[r] + 1);
  }
  return counts;
}

inline void for_each_chain(int n, const std::vector<int>& counts, const std::function<void(const PartitionChain&)>& visit) {
  std::vector<std::vector<SetPartition>> levels;
  for (int c : counts) levels.push_back(set_partitions(n, c));
  PartitionChain chain;
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == counts.size()) {
      visit(chain);
      return;
    }
    for (const auto& p : levels[r]) {
      if (r > 0 && !p.refines(chain.back())) continue;
      chain.push_back(p);
      rec(r + 1);
      chain.pop_back();
    }
  };
  rec(0);
}

// Isomorphism type of the forest of nested blocks; leaves record block size.
inline std::string block_signature(const PartitionChain& chain, std::size_t level, const std::vector<int>& members) {
  if (level + 1 == chain.size()) return std::to_string(members.size());
  std::map<int, std::vector<int>> children;
  for (int e : members) children[chain[level + 1].labels()[static_cast<std::size_t>(e)]].push_back(e);
  std::vector<std::string> parts;
  for (const auto& [label, sub] : children) parts.push_back(block_signature(chain, level + 1, sub));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p + ' ';
  return s + ")";
}

}  // namespace detail

/// Canonical label of the S_n-orbit of a chain; equal iff conjugate.
inline std::string chain_signature(const PartitionChain& chain) {
  if (chain.empty()) return "()";
  std::map<int, std::vector<int>> top;
  for (int e = 0; e < chain.front().size(); ++e) top[chain.front().labels()[static_cast<std::size_t>(e)]].push_back(e);
  std::vector<std::string> parts;
  for (const auto& [label, members] : top) parts.push_back(detail::block_signature(chain, 0, members));
  std::sort(parts.begin(), parts.end());
  std::string s = "[";
  for (const auto& p : parts) s += p + ' ';
  return s + "]";
}

/// Orbits of refinement chains with block counts ivals[r] + 1. Each class
/// keeps the first chain met in enumeration order as its representative.
inline std::vector<ChainClass> chain_classes(int n, const std::vector<int>& ivals) {
  const std::vector<int> counts = detail::chain_block_counts(n, ivals);
  std::map<std::string, std::size_t> index;
  std::vector<ChainClass> out;
  detail::for_each_chain(n, counts, [&](const PartitionChain& chain) {
    auto [it, inserted] = index.try_emplace(chain_signature(chain), out.size());
    if (inserted) out.push_back({chain, counts, 0});
    ++out[it->second].orbit_size;
  });
  return out;
}

/// Number of orbits by Burnside: average over S_n of the fixed chain count.
inline std::size_t chain_orbit_count_burnside(int n, const std::vector<int>& ivals) {
  const std::vector<int> counts = detail::chain_block_counts(n, ivals);
  std::vector<PartitionChain> chains;
  detail::for_each_chain(n, counts, [&](const PartitionChain& c) { chains.push_back(c); });
  std::size_t fixed = 0;
  for_each_permutation(n, [&](const Permutation& w) {
    for (const auto& c : chains) {
      bool same = true;
      for (const auto& p : c)
        if (!(p.act(w) == p)) {
          same = false;
          break;
        }
      if (same) ++fixed;
    }
  });
  const std::uint64_t order = weyl_group_order(WeylKind::symmetric, n);
  if (fixed % order != 0) throw std::logic_error("chain_orbit_count_burnside: fixed-point count not divisible by n!");
  return static_cast<std::size_t>(fixed / order);
}

}  // namespace comlie
