#include <gtest/gtest.h>

#include <functional>

#include "comlie/repa.hpp"

using namespace comlie;

namespace {

// Independent oracle: f^lambda(q) = sum over SYT T of q^{maj(T)}, where i is a
// descent of T when i+1 sits in a strictly lower row than i.
QPoly tableau_maj_generating_function(const Partition& lambda) {
  const auto& parts = lambda.parts();
  const int n = lambda.size();
  std::vector<int> filled(parts.size(), 0);
  std::vector<std::size_t> row_of(static_cast<std::size_t>(n) + 1);
  QPoly out;
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      int m = 0;
      for (int i = 1; i < n; ++i)
        if (row_of[static_cast<std::size_t>(i) + 1] > row_of[static_cast<std::size_t>(i)]) m += i;
      out.add_term(m, 1);
      return;
    }
    for (std::size_t r = 0; r < parts.size(); ++r) {
      if (filled[r] == parts[r] || (r > 0 && filled[r - 1] <= filled[r])) continue;
      ++filled[r];
      row_of[static_cast<std::size_t>(next)] = r;
      rec(next + 1);
      --filled[r];
    }
  };
  rec(1);
  return out;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(RepA, PartitionCounts) {
  ASSERT_EQ(partitions(0).size(), 1u);
  EXPECT_EQ(partitions(0).front().length(), 0);
  EXPECT_EQ(partitions(4).size(), 5u);
  EXPECT_EQ(partitions(5).size(), 7u);
  EXPECT_EQ(partitions(10).size(), 42u);
  EXPECT_EQ(partitions(4).front(), Partition({4}));
  EXPECT_EQ(partitions(4).back(), Partition({1, 1, 1, 1}));
}

TEST(RepA, HookLengths) {
  const auto h = hook_lengths(Partition({3, 1}));
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0], (std::vector<int>{4, 2, 1}));
  EXPECT_EQ(h[1], (std::vector<int>{1}));
}

TEST(RepA, FakeDegreeExamples) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(fake_degree(Partition({n})).poly, QPoly(1));
  EXPECT_EQ(fake_degree(Partition({1, 1})).poly, QPoly::monomial(1));
  EXPECT_EQ(fake_degree(Partition({2, 1})).poly, QPoly::monomial(1) + QPoly::monomial(2));
  EXPECT_EQ(fake_degree(Partition({1, 1, 1})).poly, QPoly::monomial(3));
}

TEST(RepA, FakeDegreeMatchesTableauMaj) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions(n))
      EXPECT_EQ(fake_degree(lambda).poly, tableau_maj_generating_function(lambda)) << lambda.to_string();
}

TEST(RepA, DimensionsAndSyt) {
  for (int n = 1; n <= 6; ++n) {
    Integer sum_sq = 0;
    for (const auto& f : fake_degrees(n)) {
      EXPECT_EQ(f.poly.eval_at_one(), Integer(syt_count(f.lambda))) << f.lambda.to_string();
      EXPECT_TRUE(f.poly.all_nonnegative());
      sum_sq += f.poly.eval_at_one() * f.poly.eval_at_one();
    }
    EXPECT_EQ(sum_sq, Integer(factorial(n)));
  }
  EXPECT_EQ(syt_count(Partition({3, 2})), 5);
  EXPECT_EQ(syt_count(Partition({2, 2, 2})), 5);
}

TEST(RepA, FakeDegreeIdentities) {
  for (int n = 1; n <= 7; ++n) {
    const auto reports = verify_fake_degree_identities(n);
    EXPECT_EQ(reports.size(), 4u);
    for (const auto& r : reports) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
  }
  EXPECT_EQ(bimahonian(3), QPoly(1) + QPoly::monomial(2) + QPoly::monomial(3, 2) + QPoly::monomial(4) +
                               QPoly::monomial(6));
  EXPECT_EQ(bimahonian(2), QPoly(1) + QPoly::monomial(2));
  EXPECT_THROW(verify_fake_degree_identities(0), std::invalid_argument);
  EXPECT_THROW(verify_fake_degree_identities(kMaxSymmetricRank + 1), SizeError);
}
