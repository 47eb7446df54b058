#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "comlie/coinvariants.hpp"
#include "comlie/poincare.hpp"

using namespace comlie;

namespace {

QPoly poly(std::initializer_list<std::pair<int, long>> terms) {
  QPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Brute-force numerators on raw words, independent of the Permutation type.
int raw_maj(const std::vector<int>& w) {
  int m = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) m += static_cast<int>(i) + 1;
  return m;
}

std::vector<int> raw_inverse(const std::vector<int>& w) {
  std::vector<int> inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int pos = static_cast<int>(i) + 1;
    inv[static_cast<std::size_t>(std::abs(w[i]) - 1)] = w[i] > 0 ? pos : -pos;
  }
  return inv;
}

QPoly brute_type_a(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  QPoly p;
  do p.add_term(2 * (raw_maj(w) + raw_maj(raw_inverse(w))), 1);
  while (std::next_permutation(w.begin(), w.end()));
  return p;
}

QPoly brute_type_c(int n) {
  auto fm = [](const std::vector<int>& w) {
    return 2 * raw_maj(w) + static_cast<int>(std::count_if(w.begin(), w.end(), [](int v) { return v < 0; }));
  };
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  QPoly p;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> s = w;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s[static_cast<std::size_t>(i)] = -s[static_cast<std::size_t>(i)];
      p.add_term(2 * (fm(s) + fm(raw_inverse(s))), 1);
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return p;
}

}  // namespace

TEST(Poincare, GroupSpecDerivedData) {
  EXPECT_EQ(GroupSpec(Family::U, 3).weyl_order(), 6);
  EXPECT_EQ(GroupSpec(Family::Sp, 3).weyl_order(), 48);
  EXPECT_EQ(GroupSpec(Family::U, 3).bg_exponents(), std::vector<int>({2, 4, 6}));
  EXPECT_EQ(GroupSpec(Family::SU, 3).bg_exponents(), std::vector<int>({4, 6}));
  EXPECT_EQ(GroupSpec(Family::Sp, 3).bg_exponents(), std::vector<int>({4, 8, 12}));
  EXPECT_EQ(GroupSpec(Family::U, 4).top_ecom_degree(), 24);
  EXPECT_EQ(GroupSpec(Family::Sp, 2).top_ecom_degree(), 16);
  EXPECT_THROW(GroupSpec(Family::U, 0), std::invalid_argument);
  EXPECT_THROW(parse_family("so"), std::invalid_argument);
}

TEST(Poincare, EcomNumeratorExamples) {
  EXPECT_EQ(ecom_numerator({Family::U, 2}), poly({{0, 1}, {4, 1}}));
  EXPECT_EQ(ecom_numerator({Family::U, 3}), poly({{0, 1}, {4, 1}, {6, 2}, {8, 1}, {12, 1}}));
  EXPECT_EQ(ecom_numerator({Family::Sp, 2}), poly({{0, 1}, {4, 1}, {8, 4}, {12, 1}, {16, 1}}));
  EXPECT_EQ(ecom_numerator({Family::Sp, 1}), poly({{0, 1}, {4, 1}}));
}

TEST(Poincare, EcomNumeratorMatchesBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(ecom_numerator({Family::U, n}), brute_type_a(n)) << n;
    EXPECT_EQ(ecom_numerator({Family::SU, n}), ecom_numerator({Family::U, n})) << n;
  }
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(ecom_numerator({Family::Sp, n}), brute_type_c(n)) << n;
}

TEST(Poincare, EcomNumeratorCap) {
  EXPECT_THROW(ecom_numerator({Family::U, kMaxSymmetricRank + 1}), SizeError);
  EXPECT_THROW(ecom_numerator({Family::Sp, kMaxHyperoctahedralRank + 1}), SizeError);
}

TEST(Poincare, BcomSeries) {
  const RationalSeries su2 = bcom_series({Family::SU, 2});
  EXPECT_EQ(expand(su2, 12), TruncatedSeries(ints({1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2})));
  EXPECT_EQ(su2.to_string(), "(1 + t^4) / ((1 - t^4))");

  const RationalSeries u2 = bcom_series({Family::U, 2});
  EXPECT_EQ(u2.numerator(), poly({{0, 1}, {4, 1}}));
  EXPECT_EQ(u2.denominator_factors(), (std::map<int, int>{{2, 1}, {4, 1}}));

  EXPECT_EQ(bcom_series({Family::Sp, 1}), su2);
}

TEST(Poincare, BgSeries) {
  EXPECT_EQ(bg_series({Family::U, 1}).denominator_factors(), (std::map<int, int>{{2, 1}}));
  EXPECT_EQ(bg_series({Family::SU, 2}).denominator_factors(), (std::map<int, int>{{4, 1}}));
  EXPECT_EQ(bg_series({Family::Sp, 2}).denominator_factors(), (std::map<int, int>{{4, 1}, {8, 1}}));
  EXPECT_EQ(bg_series({Family::SU, 1}).denominator_factors(), (std::map<int, int>{}));
}

TEST(Poincare, ProductOfGroups) {
  const std::vector<GroupSpec> factors = {{Family::SU, 2}, {Family::U, 1}};
  const RationalSeries s = bcom_series(factors);
  EXPECT_EQ(s, bcom_series({Family::SU, 2}) * bcom_series({Family::U, 1}));
  EXPECT_EQ(expand(s, 8), expand(bcom_series({Family::SU, 2}), 8) * expand(bcom_series({Family::U, 1}), 8));
}

TEST(Poincare, GeneratorCatalog) {
  using P = std::vector<std::pair<int, int>>;
  EXPECT_EQ(generator_catalog(Family::U, 2).pairs, (P{{0, 1}}));
  EXPECT_EQ(generator_catalog(Family::SU, 2).pairs, P{});
  EXPECT_EQ(generator_catalog(Family::Sp, 4).pairs, (P{{0, 2}, {1, 1}}));
  EXPECT_EQ(generator_catalog(Family::Sp, 8).pairs, (P{{0, 2}, {1, 1}, {0, 4}, {1, 3}, {2, 2}, {3, 1}}));
  EXPECT_EQ(stable_weights(Family::U, 2), (std::map<int, int>{{2, 1}}));
  for (int d = 1; d <= 10; ++d) {
    const auto u = stable_weights(Family::U, 20), su = stable_weights(Family::SU, 20),
               sp = stable_weights(Family::Sp, 20);
    auto at = [&](const std::map<int, int>& m) { return m.count(2 * d) ? m.at(2 * d) : 0; };
    EXPECT_EQ(at(u), d);
    EXPECT_EQ(at(su), d == 1 ? 0 : d);
    EXPECT_EQ(at(sp), d % 2 == 0 ? d : 0);
  }
}

TEST(Poincare, ProductRelation) {
  EXPECT_TRUE(verify_product_relation({Family::SU, 2}, 20).passed);
  EXPECT_TRUE(verify_product_relation({Family::U, 3}, 40).passed);
  EXPECT_TRUE(verify_product_relation({Family::Sp, 2}, 40).passed);
}

TEST(Poincare, Stabilization) {
  const std::vector<int> u89 = {8, 9}, u2 = {2}, sp45 = {4, 5};
  EXPECT_TRUE(verify_stabilization(Family::U, u89, 16).passed);
  EXPECT_TRUE(verify_stabilization(Family::U, u2, 4).passed);
  EXPECT_EQ(expand(bcom_series({Family::U, 2}), 4)[4], 3);
  EXPECT_TRUE(verify_stabilization(Family::Sp, sp45, 12).passed);
  // Outside the stable range the check reports the first departure.
  const auto r = verify_stabilization(Family::U, u2, 10);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.first_mismatch, stable_range(Family::U, 2) + 2);
}

TEST(Poincare, StableRangeHolds) {
  for (Family f : {Family::U, Family::SU, Family::Sp}) {
    for (int n = 1; n <= (f == Family::Sp ? 4 : 6); ++n) {
      const int range = stable_range(f, n);
      const int mismatch = expand(bcom_series({f, n}), range + 6).first_mismatch(stable_bcom(f, range + 6));
      EXPECT_TRUE(mismatch < 0 || mismatch > range) << GroupSpec(f, n).name() << " departs at " << mismatch;
    }
  }
}

TEST(Poincare, NumeratorShape) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_TRUE(verify_numerator_shape({Family::U, n}).passed) << n;
    EXPECT_TRUE(verify_numerator_shape({Family::SU, n}).passed) << n;
  }
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(verify_numerator_shape({Family::Sp, n}).passed) << n;
}

// ---------------------------------------------------------------------------

TEST(Coinvariants, ClassSizes) {
  for (int n = 1; n <= 6; ++n) {
    for (Family f : {Family::U, Family::Sp}) {
      const GroupSpec g(f, n);
      Integer total = 0;
      for (const auto& c : weyl_classes(g)) total += c.size;
      EXPECT_EQ(total, g.weyl_order()) << g.name();
    }
  }
  EXPECT_EQ(weyl_classes({Family::U, 3}).size(), 3u);
  EXPECT_EQ(weyl_classes({Family::Sp, 2}).size(), 5u);
}

TEST(Coinvariants, CharacterExamples) {
  // Identity in U(n): [n]_s!.
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(coinvariant_char({Family::U, n}, CycleData{std::vector<int>(static_cast<std::size_t>(n), 1), {}}, 30),
              TruncatedSeries::from_poly(q_factorial(n), 30));
  EXPECT_EQ(coinvariant_char({Family::U, 2}, CycleData{{2}, {}}, 4), TruncatedSeries(ints({1, -1, 0, 0, 0})));
  EXPECT_EQ(coinvariant_char({Family::Sp, 1}, CycleData{{}, {1}}, 4), TruncatedSeries(ints({1, -1, 0, 0, 0})));
  EXPECT_EQ(coinvariant_char({Family::Sp, 1}, CycleData{{1}, {}}, 4), TruncatedSeries(ints({1, 1, 0, 0, 0})));
  EXPECT_THROW(coinvariant_char({Family::U, 3}, CycleData{{2}, {}}, 4), std::invalid_argument);
  EXPECT_THROW(coinvariant_char({Family::U, 2}, CycleData{{1}, {1}}, 4), std::invalid_argument);
}

TEST(Coinvariants, IdentityCharacterHasRegularDimension) {
  for (Family f : {Family::U, Family::SU, Family::Sp}) {
    for (int n = 1; n <= 6; ++n) {
      const GroupSpec g(f, n);
      QPoly numerator = 1, denominator = 1;
      for (int d : g.invariant_degrees()) numerator *= QPoly(1) - QPoly::monomial(d);
      const int dim = f == Family::SU ? n - 1 : n;
      for (int i = 0; i < dim; ++i) denominator *= QPoly(1) - QPoly::monomial(1);
      const QPoly ch = divide_exact(numerator, denominator);
      EXPECT_EQ(ch.eval_at_one(), g.weyl_order()) << g.name();
      const CycleData id{std::vector<int>(static_cast<std::size_t>(n), 1), {}};
      EXPECT_EQ(coinvariant_char(g, id, 60), TruncatedSeries::from_poly(ch, 60)) << g.name();
    }
  }
}

TEST(Coinvariants, OracleExamples) {
  EXPECT_EQ(oracle_ecom({Family::U, 2}, 12), TruncatedSeries::from_poly(poly({{0, 1}, {4, 1}}), 12));
  EXPECT_EQ(oracle_ecom({Family::U, 3}, 12),
            TruncatedSeries::from_poly(poly({{0, 1}, {4, 1}, {6, 2}, {8, 1}, {12, 1}}), 12));
  EXPECT_EQ(oracle_bcom({Family::SU, 2}, 8), TruncatedSeries(ints({1, 0, 0, 0, 2, 0, 0, 0, 2})));
}

TEST(Coinvariants, ClassSumEqualsElementSum) {
  for (Family f : {Family::U, Family::SU, Family::Sp}) {
    for (int n = 1; n <= 4; ++n) {
      const GroupSpec g(f, n);
      EXPECT_EQ(oracle_ecom(g, 40, Summation::by_class), oracle_ecom(g, 40, Summation::by_element)) << g.name();
      EXPECT_EQ(oracle_bcom(g, 40, Summation::by_class), oracle_bcom(g, 40, Summation::by_element)) << g.name();
    }
  }
}

TEST(Coinvariants, OracleMatchesClosedForm) {
  for (Family f : {Family::U, Family::SU}) {
    for (int n = 1; n <= 6; ++n) {
      const GroupSpec g(f, n);
      EXPECT_EQ(oracle_ecom(g, 40), TruncatedSeries::from_poly(ecom_numerator(g), 40)) << g.name();
      EXPECT_EQ(oracle_bcom(g, 40), expand(bcom_series(g), 40)) << g.name();
    }
  }
  for (int n = 1; n <= 4; ++n) {
    const GroupSpec g(Family::Sp, n);
    EXPECT_EQ(oracle_ecom(g, 40), TruncatedSeries::from_poly(ecom_numerator(g), 40)) << g.name();
    EXPECT_EQ(oracle_bcom(g, 40), expand(bcom_series(g), 40)) << g.name();
  }
}

TEST(Coinvariants, OracleBeyondEnumerationCap) {
  // Large ranks only go through the class-indexed path; the numerator must
  // still have value |W| at t = 1.
  const GroupSpec g(Family::U, 12);
  const TruncatedSeries e = oracle_ecom(g, g.top_ecom_degree());
  Integer total = 0;
  for (const auto& c : e.coeffs()) total += c;
  EXPECT_EQ(total, g.weyl_order());
  EXPECT_TRUE(e.all_nonnegative());
}
