#pragma once

// Elements and statistics of the symmetric group S_n and the
// hyperoctahedral group B_n (signed permutations).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace comlie {

/// Raised when a request exceeds an enumeration or linear-algebra cap.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WeylKind { symmetric, hyperoctahedral };

/// Largest ranks for which full group enumeration is allowed.
inline constexpr int kMaxSymmetricRank = 9;
inline constexpr int kMaxHyperoctahedralRank = 5;

inline int enumeration_cap(WeylKind kind) {
  return kind == WeylKind::symmetric ? kMaxSymmetricRank : kMaxHyperoctahedralRank;
}

namespace detail {

inline std::string word_to_string(std::span<const int> word) {
  std::string s = "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(word[i]);
  }
  return s + ")";
}

inline std::vector<int> descents_of(std::span<const int> word) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

inline int maj_of(std::span<const int> word) {
  int m = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) m += static_cast<int>(i) + 1;
  return m;
}

}  // namespace detail

/// A permutation of {1..n} in one-line notation w(1),...,w(n).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<int> sorted = word_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i) + 1)
        throw std::invalid_argument("not a permutation: " + detail::word_to_string(word_));
  }

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(word_.size()); }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> word() const { return word_; }

  Permutation inverse() const {
    std::vector<int> inv(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i)
      inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> out(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) out[i] = (*this)(other.word_[i]);
    return Permutation(std::move(out));
  }

  std::vector<int> descent_set() const { return detail::descents_of(word_); }
  int maj() const { return detail::maj_of(word_); }

  std::string to_string() const { return detail::word_to_string(word_); }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

/// A signed permutation of I_n = {-n..-1,1..n} with w(-k) = -w(k); only
/// w(1),...,w(n) are stored.
class SignedPermutation {
 public:
  SignedPermutation() = default;

  explicit SignedPermutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<int> abs_sorted(word_.size());
    std::transform(word_.begin(), word_.end(), abs_sorted.begin(), [](int v) { return std::abs(v); });
    std::sort(abs_sorted.begin(), abs_sorted.end());
    for (std::size_t i = 0; i < abs_sorted.size(); ++i)
      if (abs_sorted[i] != static_cast<int>(i) + 1)
        throw std::invalid_argument("not a signed permutation: " + detail::word_to_string(word_));
  }

  static SignedPermutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return SignedPermutation(std::move(w));
  }

  int size() const { return static_cast<int>(word_.size()); }
  /// w(i) for i in I_n.
  int operator()(int i) const {
    return i > 0 ? word_[static_cast<std::size_t>(i - 1)] : -word_[static_cast<std::size_t>(-i - 1)];
  }
  std::span<const int> word() const { return word_; }

  SignedPermutation inverse() const {
    std::vector<int> inv(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) {
      const int v = word_[i];
      const int pos = static_cast<int>(i) + 1;
      inv[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? pos : -pos;
    }
    return SignedPermutation(std::move(inv));
  }

  SignedPermutation compose(const SignedPermutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> out(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) out[i] = (*this)(other.word_[i]);
    return SignedPermutation(std::move(out));
  }

  /// Descents use the natural order on the integers, so 1 > -2 is a descent.
  std::vector<int> descent_set() const { return detail::descents_of(word_); }
  int maj() const { return detail::maj_of(word_); }

  int neg() const {
    return static_cast<int>(std::count_if(word_.begin(), word_.end(), [](int v) { return v < 0; }));
  }

  /// f_i = 2 d_i + eps_i where d_i counts descents at positions >= i and
  /// eps_i = 1 iff w(i) < 0.
  std::vector<int> f_vector() const {
    const int n = size();
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    int descents_at_or_after = 0;
    for (int i = n; i >= 1; --i) {
      if (i < n && (*this)(i) > (*this)(i + 1)) ++descents_at_or_after;
      f[static_cast<std::size_t>(i - 1)] = 2 * descents_at_or_after + ((*this)(i) < 0 ? 1 : 0);
    }
    return f;
  }

  /// Flag major index, summed from the f-vector.
  int fmaj() const {
    const auto f = f_vector();
    return std::accumulate(f.begin(), f.end(), 0);
  }

  Permutation absolute() const {
    std::vector<int> w(word_.size());
    std::transform(word_.begin(), word_.end(), w.begin(), [](int v) { return std::abs(v); });
    return Permutation(std::move(w));
  }

  std::string to_string() const { return detail::word_to_string(word_); }

  bool operator==(const SignedPermutation&) const = default;
  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> word_;
};

inline Permutation inverse(const Permutation& w) { return w.inverse(); }
inline SignedPermutation inverse(const SignedPermutation& w) { return w.inverse(); }
inline int maj(const Permutation& w) { return w.maj(); }
inline int maj(const SignedPermutation& w) { return w.maj(); }
inline std::vector<int> descent_set(const Permutation& w) { return w.descent_set(); }
inline std::vector<int> descent_set(const SignedPermutation& w) { return w.descent_set(); }
inline int fmaj(const SignedPermutation& w) { return w.fmaj(); }
inline int neg(const SignedPermutation& w) { return w.neg(); }
inline std::vector<int> f_vector(const SignedPermutation& w) { return w.f_vector(); }

// ---------------------------------------------------------------------------
// Cycle structure

/// Cycle lengths of an element; negative cycles only occur in B_n. Both lists
/// are kept sorted in nonincreasing order.
struct CycleData {
  std::vector<int> positive_cycles;
  std::vector<int> negative_cycles;

  int total() const {
    return std::accumulate(positive_cycles.begin(), positive_cycles.end(), 0) +
           std::accumulate(negative_cycles.begin(), negative_cycles.end(), 0);
  }

  void normalize() {
    std::sort(positive_cycles.begin(), positive_cycles.end(), std::greater<>());
    std::sort(negative_cycles.begin(), negative_cycles.end(), std::greater<>());
  }

  bool operator==(const CycleData&) const = default;
  auto operator<=>(const CycleData&) const = default;
};

inline CycleData cycle_data(const Permutation& w) {
  CycleData c;
  const int n = w.size();
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = w(i)) {
      seen[static_cast<std::size_t>(i)] = true;
      ++len;
    }
    c.positive_cycles.push_back(len);
  }
  c.normalize();
  return c;
}

/// Cycles of |w|; a cycle is negative iff the product of the signs along it
/// is -1.
inline CycleData cycle_data(const SignedPermutation& w) {
  CycleData c;
  const int n = w.size();
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    int sign = 1;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = std::abs(w(i))) {
      seen[static_cast<std::size_t>(i)] = true;
      if (w(i) < 0) sign = -sign;
      ++len;
    }
    (sign > 0 ? c.positive_cycles : c.negative_cycles).push_back(len);
  }
  c.normalize();
  return c;
}

// ---------------------------------------------------------------------------
// Enumeration

inline void check_enumeration_size(WeylKind kind, int n) {
  if (n < 1 || n > enumeration_cap(kind))
    throw SizeError("enumeration rank " + std::to_string(n) + " outside [1, " +
                    std::to_string(enumeration_cap(kind)) + "] for " +
                    (kind == WeylKind::symmetric ? "S_n" : "B_n"));
}

/// Visits S_n in lexicographic order of the one-line word.
template <typename Visitor>
void for_each_permutation(int n, Visitor&& visit) {
  check_enumeration_size(WeylKind::symmetric, n);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

/// Visits B_n: permutations of absolute values in lexicographic order, sign
/// patterns innermost (bit i of the mask negates position i+1).
template <typename Visitor>
void for_each_signed_permutation(int n, Visitor&& visit) {
  check_enumeration_size(WeylKind::hyperoctahedral, n);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<int> signed_word(w.size());
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      for (int i = 0; i < n; ++i)
        signed_word[static_cast<std::size_t>(i)] = (mask >> i & 1u) ? -w[static_cast<std::size_t>(i)]
                                                                   : w[static_cast<std::size_t>(i)];
      visit(SignedPermutation(signed_word));
    }
  } while (std::next_permutation(w.begin(), w.end()));
}

inline std::vector<Permutation> enumerate_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

inline std::vector<SignedPermutation> enumerate_signed_permutations(int n) {
  std::vector<SignedPermutation> out;
  for_each_signed_permutation(n, [&](const SignedPermutation& w) { out.push_back(w); });
  return out;
}

/// |S_n| = n!, |B_n| = 2^n n!.
inline std::uint64_t weyl_group_order(WeylKind kind, int n) {
  std::uint64_t order = 1;
  for (int i = 2; i <= n; ++i) order *= static_cast<std::uint64_t>(i);
  if (kind == WeylKind::hyperoctahedral) order <<= n;
  return order;
}

}  // namespace comlie
