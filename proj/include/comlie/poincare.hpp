#pragma once

// Closed-form Poincare series of E_com G and B_com G for G = U(n), SU(n),
// Sp(n), the stable generator catalogs, and the identities tying them together.

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"
#include "qseries.hpp"
#include "report.hpp"
#include "weyl.hpp"

namespace comlie {

inline void check_enumerable(const GroupSpec& g) {
  const int cap = enumeration_cap(g.weyl_kind());
  if (g.n > cap)
    throw SizeError(g.name() + " exceeds the Weyl enumeration cap (rank <= " + std::to_string(cap) +
                    "); use the Molien oracle instead");
}

/// sum over W of t^{2(maj(w) + maj(w^-1))} for S_n, and of
/// t^{2(fmaj(w) + fmaj(w^-1))} for B_n.
inline QPoly ecom_numerator(const GroupSpec& g) {
  check_enumerable(g);
  std::vector<long> histogram(static_cast<std::size_t>(g.top_ecom_degree() / 2 + 1), 0);
  if (g.weyl_kind() == WeylKind::symmetric) {
    for_each_permutation(g.n, [&](const Permutation& w) {
      ++histogram[static_cast<std::size_t>(w.maj() + w.inverse().maj())];
    });
  } else {
    for_each_signed_permutation(g.n, [&](const SignedPermutation& w) {
      ++histogram[static_cast<std::size_t>(w.fmaj() + w.inverse().fmaj())];
    });
  }
  QPoly p;
  for (std::size_t k = 0; k < histogram.size(); ++k) p.add_term(2 * static_cast<int>(k), histogram[k]);
  return p;
}

/// 1 / prod (1 - t^{2 d_i}) over the basic invariant degrees of W.
inline RationalSeries bg_series(const GroupSpec& g) {
  RationalSeries s(QPoly(1));
  for (int e : g.bg_exponents()) s.add_denominator_factor(e);
  return s;
}

/// P_{B_com G} = P_{BG} * P_{E_com G}.
inline RationalSeries bcom_series(const GroupSpec& g) {
  RationalSeries s(ecom_numerator(g));
  for (int e : g.bg_exponents()) s.add_denominator_factor(e);
  return s;
}

/// B_com of a finite product of classical groups.
inline RationalSeries bcom_series(std::span<const GroupSpec> factors) {
  RationalSeries s;
  for (const auto& g : factors) s = s * bcom_series(g);
  return s;
}

// ---------------------------------------------------------------------------
// Stable catalogs

/// Polynomial generators z_{a,b} of H*(B_com G) in the limit n -> infinity;
/// z_{a,b} sits in cohomological degree 2(a+b).
struct GeneratorCatalog {
  Family family = Family::U;
  std::vector<std::pair<int, int>> pairs;

  static int degree(const std::pair<int, int>& ab) { return 2 * (ab.first + ab.second); }
};

inline bool in_stable_catalog(Family f, int a, int b) {
  if (a < 0 || b <= 0) return false;
  switch (f) {
    case Family::U: return true;
    case Family::SU: return !(a == 0 && b == 1);
    case Family::Sp: return (a + b) % 2 == 0;
  }
  return false;
}

/// All catalog pairs with 2(a+b) <= max_total_degree, ordered by a+b then a.
inline GeneratorCatalog generator_catalog(Family f, int max_total_degree) {
  GeneratorCatalog cat{f, {}};
  for (int d = 1; 2 * d <= max_total_degree; ++d)
    for (int a = 0; a <= d; ++a)
      if (in_stable_catalog(f, a, d - a)) cat.pairs.emplace_back(a, d - a);
  return cat;
}

/// Cohomological degree -> number of catalog generators in that degree.
inline std::map<int, int> stable_weights(Family f, int max_total_degree) {
  std::map<int, int> w;
  for (const auto& ab : generator_catalog(f, max_total_degree).pairs) ++w[GeneratorCatalog::degree(ab)];
  return w;
}

inline TruncatedSeries stable_bcom(Family f, int trunc) { return product_series(stable_weights(f, trunc), trunc); }

/// Degree through which bcom_series(family(n)) is expected to match the stable
/// series: invariants of polynomial degree d only see d (type A) or
/// floor(d/2) (type C) nonzero variable pairs.
inline int stable_range(Family f, int n) { return f == Family::Sp ? 4 * n + 2 : 2 * n; }

// ---------------------------------------------------------------------------
// Verification

inline CheckReport verify_product_relation(const GroupSpec& g, int trunc) {
  CheckReport r{"product relation " + g.name(), false, -1, ""};
  const QPoly numerator = ecom_numerator(g);
  const TruncatedSeries lhs = expand(bcom_series(g), trunc);
  const TruncatedSeries rhs = expand(bg_series(g), trunc) * TruncatedSeries::from_poly(numerator, trunc);
  r.first_mismatch = lhs.first_mismatch(rhs);
  r.passed = r.first_mismatch < 0;
  r.detail = r.passed ? "P_Bcom = P_BG * P_Ecom through degree " + std::to_string(trunc)
                      : "first mismatch at degree " + std::to_string(r.first_mismatch);
  return r;
}

inline CheckReport verify_stabilization(Family f, std::span<const int> ranks, int trunc) {
  CheckReport r{"stabilization " + to_string(f), true, -1, ""};
  const TruncatedSeries stable = stable_bcom(f, trunc);
  std::string checked;
  for (int n : ranks) {
    const GroupSpec g(f, n);
    const int mismatch = expand(bcom_series(g), trunc).first_mismatch(stable);
    if (mismatch >= 0 && (r.first_mismatch < 0 || mismatch < r.first_mismatch)) {
      r.passed = false;
      r.first_mismatch = mismatch;
      r.detail = g.name() + " departs from the stable series at degree " + std::to_string(mismatch);
    }
    checked += (checked.empty() ? "" : ", ") + g.name();
  }
  if (r.passed) r.detail = checked + " agree with the stable series through degree " + std::to_string(trunc);
  return r;
}

/// Freeness rank, duality and top degree of the E_com numerator.
inline CheckReport verify_numerator_shape(const GroupSpec& g) {
  CheckReport r{"freeness rank and duality " + g.name(), false, -1, ""};
  const QPoly p = ecom_numerator(g);
  const int top = g.top_ecom_degree();
  std::vector<std::string> failures;
  if (p.eval_at_one() != g.weyl_order())
    failures.push_back("value at 1 is " + p.eval_at_one().get_str() + ", expected |W| = " + g.weyl_order().get_str());
  if (p.degree() != top)
    failures.push_back("top degree " + std::to_string(p.degree()) + ", expected " + std::to_string(top));
  if (p.leading_coeff() != 1) failures.push_back("leading coefficient " + p.leading_coeff().get_str());
  if (p.coeff(0) != 1) failures.push_back("constant term " + p.coeff(0).get_str());
  if (!p.is_palindromic(top)) failures.push_back("not palindromic about " + std::to_string(top / 2));
  r.passed = failures.empty();
  if (r.passed) {
    r.detail = "P(1) = " + g.weyl_order().get_str() + ", palindromic of degree " + std::to_string(top);
  } else {
    for (const auto& f : failures) r.detail += (r.detail.empty() ? "" : "; ") + f;
  }
  return r;
}

}  // namespace comlie
