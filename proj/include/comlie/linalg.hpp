#pragma once

// Exact rank of rational matrices via fraction-free (Bareiss) elimination.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace comlie {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;
using RationalMatrix = std::vector<std::vector<mpq_class>>;

/// Rank of an integer matrix. Every surviving entry after step k is a
/// (k+1)-minor of the input, so the division by the previous pivot is exact.
inline std::size_t bareiss_rank(IntegerMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  for (const auto& r : m)
    if (r.size() != cols) throw std::invalid_argument("bareiss_rank: ragged matrix");

  std::size_t rank = 0;
  mpz_class prev_pivot = 1;
  mpz_class t;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const mpz_class& p = m[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const mpz_class factor = m[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        t = p * m[i][j] - factor * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

/// Clears denominators row by row, then runs fraction-free elimination.
inline std::size_t exact_rank(const RationalMatrix& m) {
  IntegerMatrix im;
  im.reserve(m.size());
  for (const auto& row : m) {
    mpz_class lcm = 1;
    for (const auto& v : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> irow;
    irow.reserve(row.size());
    for (const auto& v : row) irow.emplace_back(v.get_num() * (lcm / v.get_den()));
    im.push_back(std::move(irow));
  }
  return bareiss_rank(std::move(im));
}

}  // namespace comlie
