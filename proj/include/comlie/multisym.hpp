#pragma once

// The multisymmetric invariant rings M^{S_n} = Q[x,y]^{S_n} and
// M^{B_n} = Q[x,y]^{B_n} under the diagonal action: averaging, power sums,
// descent monomials, and exact graded linear algebra on invariant pieces.
//
// Degrees in this module are polynomial degrees (deg x_i = deg y_i = 1); the
// cohomological degree is twice that.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"
#include "linalg.hpp"
#include "multipoly.hpp"
#include "qseries.hpp"
#include "report.hpp"
#include "weyl.hpp"

namespace comlie {

/// Largest invariant graded piece the elimination routines accept.
inline constexpr std::size_t kMaxGradedDimension = 4000;
/// Largest number of variables per block for the graded routines.
inline constexpr int kMaxMultisymRank = 6;

// ---------------------------------------------------------------------------
// Group action and averaging

namespace detail {

inline void require_rank(int w_size, const MultiPoly& p) {
  if (w_size != p.num_vars())
    throw std::invalid_argument("act: element of rank " + std::to_string(w_size) + " on polynomial in " +
                                std::to_string(p.num_vars()) + " variable pairs");
}

}  // namespace detail

/// x_i -> x_{w(i)}, y_i -> y_{w(i)}.
inline MultiPoly act(const Permutation& w, const MultiPoly& p) {
  detail::require_rank(w.size(), p);
  const auto n = static_cast<std::size_t>(p.num_vars());
  MultiPoly out(p.num_vars());
  Monomial image(2 * n);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto target = static_cast<std::size_t>(w(static_cast<int>(i) + 1) - 1);
      image[target] = m[i];
      image[n + target] = m[n + i];
    }
    out.add_term(image, c);
  }
  return out;
}

/// x_i -> sign * x_{|w(i)|}, y_i -> sign * y_{|w(i)|} with sign = sign of w(i).
inline MultiPoly act(const SignedPermutation& w, const MultiPoly& p) {
  detail::require_rank(w.size(), p);
  const auto n = static_cast<std::size_t>(p.num_vars());
  MultiPoly out(p.num_vars());
  Monomial image(2 * n);
  for (const auto& [m, c] : p.terms()) {
    bool negate = false;
    for (std::size_t i = 0; i < n; ++i) {
      const int v = w(static_cast<int>(i) + 1);
      const auto target = static_cast<std::size_t>(std::abs(v) - 1);
      image[target] = m[i];
      image[n + target] = m[n + i];
      if (v < 0 && (m[i] + m[n + i]) % 2 == 1) negate = !negate;
    }
    out.add_term(image, negate ? MultiPoly::Coefficient(-c) : c);
  }
  return out;
}

/// Reynolds operator (1/|W|) sum_w w.P.
inline MultiPoly average(WeylKind kind, const MultiPoly& p) {
  const int n = p.num_vars();
  MultiPoly sum(n);
  if (kind == WeylKind::symmetric)
    for_each_permutation(n, [&](const Permutation& w) { sum += act(w, p); });
  else
    for_each_signed_permutation(n, [&](const SignedPermutation& w) { sum += act(w, p); });
  sum *= MultiPoly::Coefficient(1, static_cast<unsigned long>(weyl_group_order(kind, n)));
  return sum;
}

/// p_n(a,b) = x_1^a y_1^b + ... + x_n^a y_n^b.
inline MultiPoly power_sum(int n, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("power_sum: negative exponent");
  if (a + b == 0) throw std::invalid_argument("power_sum: a + b must be >= 1");
  MultiPoly p(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> xs(static_cast<std::size_t>(n), 0), ys(static_cast<std::size_t>(n), 0);
    xs[static_cast<std::size_t>(i)] = a;
    ys[static_cast<std::size_t>(i)] = b;
    p += MultiPoly::monomial(n, xs, ys);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Descent monomials

/// e_w = prod_{i in Des(w^-1)} (x_1...x_i) * prod_{j in Des(w)} (y_{w(1)}...y_{w(j)}).
inline MultiPoly descent_monomial(const Permutation& w) {
  const int n = w.size();
  std::vector<int> xs(static_cast<std::size_t>(n), 0), ys(static_cast<std::size_t>(n), 0);
  for (int i : w.inverse().descent_set())
    for (int k = 1; k <= i; ++k) ++xs[static_cast<std::size_t>(k - 1)];
  for (int j : w.descent_set())
    for (int k = 1; k <= j; ++k) ++ys[static_cast<std::size_t>(w(k) - 1)];
  return MultiPoly::monomial(n, xs, ys);
}

/// c_w = prod_i x_i^{f_i(w^-1)} y_{|w(i)|}^{f_i(w)}.
inline MultiPoly signed_descent_monomial(const SignedPermutation& w) {
  const int n = w.size();
  const auto f = w.f_vector();
  const auto f_inv = w.inverse().f_vector();
  std::vector<int> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    xs[static_cast<std::size_t>(i - 1)] = f_inv[static_cast<std::size_t>(i - 1)];
    ys[static_cast<std::size_t>(std::abs(w(i)) - 1)] = f[static_cast<std::size_t>(i - 1)];
  }
  return MultiPoly::monomial(n, xs, ys);
}

// ---------------------------------------------------------------------------
// Orbit-sum coordinates on invariant graded pieces

/// Representative of the S_n-orbit of a monomial: variable pairs (a_i, b_i)
/// sorted in nonincreasing order.
inline Monomial canonical_monomial(const Monomial& m) {
  const std::size_t n = m.size() / 2;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {m[i], m[n + i]};
  std::sort(pairs.begin(), pairs.end(), std::greater<>());
  Monomial out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = pairs[i].first;
    out[n + i] = pairs[i].second;
  }
  return out;
}

/// True if every pair degree a_i + b_i is even, the condition for a monomial
/// to survive B_n averaging.
inline bool has_even_pairs(const Monomial& m) {
  const std::size_t n = m.size() / 2;
  for (std::size_t i = 0; i < n; ++i)
    if ((m[i] + m[n + i]) % 2 != 0) return false;
  return true;
}

namespace detail {

inline void orbit_reps_rec(WeylKind kind, std::size_t n, std::size_t slot, int remaining,
                           std::pair<int, int> bound, Monomial& current, std::vector<Monomial>& out) {
  if (slot == n) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  // Pairs in nonincreasing lexicographic order, each bounded by the previous.
  for (int a = std::min(bound.first, remaining); a >= 0; --a) {
    const int max_b = a == bound.first ? std::min(bound.second, remaining - a) : remaining - a;
    for (int b = max_b; b >= 0; --b) {
      if (kind == WeylKind::hyperoctahedral && (a + b) % 2 != 0) continue;
      current[slot] = static_cast<std::uint8_t>(a);
      current[n + slot] = static_cast<std::uint8_t>(b);
      orbit_reps_rec(kind, n, slot + 1, remaining - a - b, {a, b}, current, out);
    }
  }
  current[slot] = 0;
  current[n + slot] = 0;
}

}  // namespace detail

/// Canonical monomials whose orbit sums form a basis of the degree-d piece of
/// M^W.
inline std::vector<Monomial> invariant_orbits(WeylKind kind, int n, int d) {
  if (n < 1) throw std::invalid_argument("invariant_orbits: n must be >= 1");
  if (d < 0) return {};
  std::vector<Monomial> out;
  Monomial current(2 * static_cast<std::size_t>(n), 0);
  detail::orbit_reps_rec(kind, static_cast<std::size_t>(n), 0, d, {d, d}, current, out);
  return out;
}

inline long invariant_graded_dim(WeylKind kind, int n, int d) {
  return static_cast<long>(invariant_orbits(kind, n, d).size());
}

/// Sum of the distinct monomials in the S_n-orbit of rep (coefficient 1 each).
inline MultiPoly orbit_sum(const Monomial& rep) {
  const std::size_t n = rep.size() / 2;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {rep[i], rep[n + i]};
  std::sort(pairs.begin(), pairs.end());
  MultiPoly out(static_cast<int>(n));
  Monomial m(2 * n);
  do {
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = pairs[i].first;
      m[n + i] = pairs[i].second;
    }
    out.add_term(m, 1);
  } while (std::next_permutation(pairs.begin(), pairs.end()));
  return out;
}

/// Coordinates of invariant polynomials of one degree in the orbit-sum basis.
class OrbitCoordinates {
 public:
  OrbitCoordinates(WeylKind kind, int n, int d) : basis_(invariant_orbits(kind, n, d)) {
    if (basis_.size() > kMaxGradedDimension)
      throw SizeError("invariant piece of degree " + std::to_string(d) + " has dimension " +
                      std::to_string(basis_.size()) + " > " + std::to_string(kMaxGradedDimension));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      index_.emplace(basis_[i], i);
      orbit_sizes_.push_back(orbit_size(basis_[i]));
    }
  }

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }

  /// Throws std::domain_error if p is not an invariant of this degree.
  std::vector<mpq_class> operator()(const MultiPoly& p) const {
    std::vector<mpq_class> coords(basis_.size());
    for (const auto& [m, c] : p.terms()) {
      auto it = index_.find(canonical_monomial(m));
      if (it == index_.end()) throw std::domain_error("OrbitCoordinates: polynomial is not an invariant of this degree");
      if (m == it->first) coords[it->second] = c;
    }
    // An invariant has a constant coefficient along each full orbit.
    std::vector<std::size_t> seen(basis_.size(), 0);
    for (const auto& [m, c] : p.terms()) {
      const std::size_t i = index_.at(canonical_monomial(m));
      if (c != coords[i]) throw std::domain_error("OrbitCoordinates: polynomial is not W-invariant");
      ++seen[i];
    }
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (seen[i] != 0 && seen[i] != orbit_sizes_[i])
        throw std::domain_error("OrbitCoordinates: polynomial is not W-invariant");
    return coords;
  }

 private:
  // n! / prod (multiplicity of each distinct pair)!
  static std::size_t orbit_size(const Monomial& rep) {
    const std::size_t n = rep.size() / 2;
    std::map<std::pair<std::uint8_t, std::uint8_t>, std::size_t> mult;
    for (std::size_t i = 0; i < n; ++i) ++mult[{rep[i], rep[n + i]}];
    std::size_t size = 1;
    for (std::size_t i = 2; i <= n; ++i) size *= i;
    for (const auto& [pair, m] : mult)
      for (std::size_t k = 2; k <= m; ++k) size /= k;
    return size;
  }

  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
  std::vector<std::size_t> orbit_sizes_;
};

// ---------------------------------------------------------------------------
// Ideals and quotients

/// Ideal of M^W generated by the power sums p(a,b) listed.
struct IdealSpec {
  std::vector<std::pair<int, int>> generators;
};

/// Ideal of positive-degree elements of H*(BG) pulled back through the y-free
/// variables: J_n for U(n), K_n for SU(n), L_n for Sp(n).
inline IdealSpec bcom_ideal(Family f, int n) {
  IdealSpec ideal;
  for (int a = 1; a <= n; ++a) ideal.generators.emplace_back(f == Family::Sp ? 2 * a : a, 0);
  if (f == Family::SU) ideal.generators.emplace_back(0, 1);
  return ideal;
}

/// Ideal whose quotient is H*(E_com G): the B_com ideal plus its mirror in y.
inline IdealSpec ecom_ideal(Family f, int n) {
  if (f == Family::SU)
    throw std::invalid_argument("ecom_ideal: no separate SU(n) presentation; use the U(n) ideal");
  IdealSpec ideal = bcom_ideal(f, n);
  for (int a = 1; a <= n; ++a) ideal.generators.emplace_back(0, f == Family::Sp ? 2 * a : a);
  return ideal;
}

using GradedDims = std::vector<long>;

namespace detail {

inline void check_graded_size(int n, int d) {
  if (n < 1 || n > kMaxMultisymRank)
    throw SizeError("multisymmetric linear algebra needs 1 <= n <= " + std::to_string(kMaxMultisymRank));
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
}

}  // namespace detail

/// dim (M^W / I)_d for d = 0..max_degree, by exact elimination in orbit-sum
/// coordinates.
inline GradedDims quotient_graded_dims(WeylKind kind, int n, const IdealSpec& ideal, int max_degree) {
  detail::check_graded_size(n, max_degree);
  for (const auto& [a, b] : ideal.generators) {
    if (a < 0 || b < 0 || a + b < 1) throw std::invalid_argument("ideal generators need a + b >= 1");
    if (kind == WeylKind::hyperoctahedral && (a + b) % 2 != 0)
      throw std::invalid_argument("p(" + std::to_string(a) + "," + std::to_string(b) + ") is not B_n-invariant");
  }
  std::vector<MultiPoly> gens;
  for (const auto& [a, b] : ideal.generators) gens.push_back(power_sum(n, a, b));

  GradedDims dims;
  for (int d = 0; d <= max_degree; ++d) {
    const OrbitCoordinates coords(kind, n, d);
    RationalMatrix rows;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const int e = ideal.generators[g].first + ideal.generators[g].second;
      if (e > d) continue;
      for (const auto& rep : invariant_orbits(kind, n, d - e)) rows.push_back(coords(orbit_sum(rep) * gens[g]));
    }
    dims.push_back(static_cast<long>(coords.dimension()) - static_cast<long>(exact_rank(rows)));
  }
  return dims;
}

/// Hilbert series of M^W through max_degree in polynomial grading.
inline TruncatedSeries invariant_hilbert_series(WeylKind kind, int n, int max_degree) {
  TruncatedSeries s(max_degree);
  for (int d = 0; d <= max_degree; ++d) s[d] = invariant_graded_dim(kind, n, d);
  return s;
}

// ---------------------------------------------------------------------------
// Free basis and generation checks

namespace detail {

/// Degrees of the basic invariants of W acting on one block of variables.
inline std::vector<int> basic_invariant_degrees(WeylKind kind, int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i) d.push_back(kind == WeylKind::symmetric ? i : 2 * i);
  return d;
}

/// All products of the given generators, grouped by total degree 0..max_degree.
inline std::vector<std::vector<MultiPoly>> products_by_degree(int n, const std::vector<std::pair<int, MultiPoly>>& gens,
                                                              int max_degree) {
  std::vector<std::vector<MultiPoly>> out(static_cast<std::size_t>(max_degree) + 1);
  std::function<void(std::size_t, int, const MultiPoly&)> rec = [&](std::size_t i, int degree, const MultiPoly& acc) {
    if (i == gens.size()) {
      out[static_cast<std::size_t>(degree)].push_back(acc);
      return;
    }
    rec(i + 1, degree, acc);
    MultiPoly next = acc;
    for (int d = degree + gens[i].first; d <= max_degree; d += gens[i].first) {
      next *= gens[i].second;
      rec(i + 1, d, next);
    }
  };
  rec(0, 0, MultiPoly::constant(n, 1));
  return out;
}

/// Products in p(a,0) (block x) or p(0,a) (block y) over the basic invariant
/// degrees a, i.e. a basis of Q[x]^W or Q[y]^W by degree.
inline std::vector<std::vector<MultiPoly>> block_invariant_basis(WeylKind kind, int n, bool y_block, int max_degree) {
  std::vector<std::pair<int, MultiPoly>> gens;
  for (int a : basic_invariant_degrees(kind, n))
    if (a <= max_degree) gens.emplace_back(a, y_block ? power_sum(n, 0, a) : power_sum(n, a, 0));
  return products_by_degree(n, gens, max_degree);
}

}  // namespace detail

/// One averaged descent monomial rho(e_w) or rho(c_w).
struct BasisElement {
  std::string element;  // one-line word of w
  MultiPoly monomial;
  MultiPoly averaged;
  int degree = 0;  // polynomial degree
};

struct FreeBasisReport {
  bool passed = false;
  std::vector<BasisElement> elements;
  std::vector<CheckReport> checks;
};

/// The averaged descent monomials of S_n (e_w) or B_n (c_w), in enumeration
/// order of w.
inline std::vector<BasisElement> averaged_descent_basis(WeylKind kind, int n) {
  std::vector<BasisElement> out;
  auto push = [&](std::string label, MultiPoly mono) {
    const int deg = mono.homogeneous_degree();
    MultiPoly avg = average(kind, mono);
    out.push_back({std::move(label), std::move(mono), std::move(avg), deg});
  };
  if (kind == WeylKind::symmetric)
    for_each_permutation(n, [&](const Permutation& w) { push(w.to_string(), descent_monomial(w)); });
  else
    for_each_signed_permutation(n, [&](const SignedPermutation& w) { push(w.to_string(), signed_descent_monomial(w)); });
  return out;
}

/// Checks that the averaged descent monomials form a free basis of M^W over
/// Q[x]^W (x) Q[y]^W, degree by degree through max_degree.
inline FreeBasisReport verify_free_basis(WeylKind kind, int n, int max_degree) {
  detail::check_graded_size(n, max_degree);
  FreeBasisReport report;
  report.elements = averaged_descent_basis(kind, n);

  CheckReport nonzero{"averaged descent monomials nonzero", true, -1, ""};
  for (const auto& e : report.elements) {
    if (e.averaged.is_zero()) {
      nonzero.passed = false;
      nonzero.detail += (nonzero.detail.empty() ? "" : ", ") + e.element;
    }
  }
  if (nonzero.passed) nonzero.detail = std::to_string(report.elements.size()) + " basis elements";
  else nonzero.detail = "zero average for " + nonzero.detail;
  report.checks.push_back(nonzero);

  const auto xbasis = detail::block_invariant_basis(kind, n, false, max_degree);
  const auto ybasis = detail::block_invariant_basis(kind, n, true, max_degree);

  CheckReport span{"free basis spans and is independent", true, -1, ""};
  for (int d = 0; d <= max_degree && span.passed; ++d) {
    const OrbitCoordinates coords(kind, n, d);
    RationalMatrix rows;
    for (const auto& e : report.elements) {
      if (e.degree > d || e.averaged.is_zero()) continue;
      const int rest = d - e.degree;
      for (int i = 0; i <= rest; ++i) {
        for (const auto& xp : xbasis[static_cast<std::size_t>(i)]) {
          const MultiPoly ex = e.averaged * xp;
          for (const auto& yp : ybasis[static_cast<std::size_t>(rest - i)]) rows.push_back(coords(ex * yp));
        }
      }
    }
    const std::size_t rank = exact_rank(rows);
    if (rank != rows.size() || rank != coords.dimension()) {
      span.passed = false;
      span.first_mismatch = d;
      span.detail = "degree " + std::to_string(d) + ": " + std::to_string(rows.size()) + " products of rank " +
                    std::to_string(rank) + " in an invariant piece of dimension " + std::to_string(coords.dimension());
    }
  }
  if (span.passed) span.detail = "rank = count = dim M^W_d for d <= " + std::to_string(max_degree);
  report.checks.push_back(span);

  // sum_w s^{deg w} / prod (1 - s^{d_i})^2 against the orbit count.
  CheckReport hilbert{"Hilbert series identity", false, -1, ""};
  TruncatedSeries lhs(max_degree);
  for (const auto& e : report.elements)
    if (e.degree <= max_degree) lhs[e.degree] += 1;
  for (int a : detail::basic_invariant_degrees(kind, n)) lhs.divide_one_minus(a).divide_one_minus(a);
  const TruncatedSeries rhs = invariant_hilbert_series(kind, n, max_degree);
  hilbert.first_mismatch = lhs.first_mismatch(rhs);
  hilbert.passed = hilbert.first_mismatch < 0;
  hilbert.detail = hilbert.passed ? "holds through degree " + std::to_string(max_degree)
                                  : "first mismatch at degree " + std::to_string(hilbert.first_mismatch);
  report.checks.push_back(hilbert);

  report.passed = all_passed(report.checks);
  return report;
}

/// Power sums used as algebra generators: 0 < a+b <= n for S_n; every even
/// 0 < a+b <= max_degree for B_n.
inline std::vector<std::pair<int, int>> generating_power_sums(WeylKind kind, int n, int max_degree) {
  std::vector<std::pair<int, int>> out;
  const int top = kind == WeylKind::symmetric ? std::min(n, max_degree) : max_degree;
  for (int d = 1; d <= top; ++d) {
    if (kind == WeylKind::hyperoctahedral && d % 2 != 0) continue;
    for (int a = d; a >= 0; --a) out.emplace_back(a, d - a);
  }
  return out;
}

/// Degree-wise check that products of the generating power sums span M^W_d.
inline CheckReport verify_power_sum_generation(WeylKind kind, int n, int max_degree) {
  detail::check_graded_size(n, max_degree);
  CheckReport r{"power sums generate M^W", true, -1, ""};
  std::vector<std::pair<int, MultiPoly>> gens;
  for (const auto& [a, b] : generating_power_sums(kind, n, max_degree)) gens.emplace_back(a + b, power_sum(n, a, b));
  const auto products = detail::products_by_degree(n, gens, max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    const OrbitCoordinates coords(kind, n, d);
    RationalMatrix rows;
    for (const auto& p : products[static_cast<std::size_t>(d)]) rows.push_back(coords(p));
    const std::size_t rank = exact_rank(rows);
    if (rank != coords.dimension()) {
      r.passed = false;
      r.first_mismatch = d;
      r.detail = "degree " + std::to_string(d) + ": span has rank " + std::to_string(rank) + " < " +
                 std::to_string(coords.dimension());
      return r;
    }
  }
  r.detail = std::to_string(gens.size()) + " power sums span every degree <= " + std::to_string(max_degree);
  return r;
}

}  // namespace comlie
