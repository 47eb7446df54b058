#pragma once

// Fake degrees of the symmetric group and the two identities relating them to
// the coinvariant algebra and to the E_com numerator of U(n).

#include <functional>
#include <string>
#include <vector>

#include "coinvariants.hpp"
#include "group.hpp"
#include "partition.hpp"
#include "poincare.hpp"
#include "qseries.hpp"
#include "report.hpp"
#include "weyl.hpp"

namespace comlie {

/// Graded multiplicity of the irreducible S_n-module lambda in the
/// coinvariant algebra, with q of degree one in the polynomial grading.
struct FakeDegree {
  Partition lambda;
  QPoly poly;
};

/// Hook lengths row by row.
inline std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::vector<std::vector<int>> hooks;
  for (int i = 0; i < lambda.length(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j)
      row.push_back(lambda[static_cast<std::size_t>(i)] - j + conj[static_cast<std::size_t>(j)] - i - 1);
    hooks.push_back(std::move(row));
  }
  return hooks;
}

/// Number of standard Young tableaux of shape lambda, by filling cells with
/// 1..n in order.
inline long syt_count(const Partition& lambda) {
  const auto& parts = lambda.parts();
  std::vector<int> filled(parts.size(), 0);
  std::function<long(int)> rec = [&](int remaining) -> long {
    if (remaining == 0) return 1;
    long total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (filled[i] == parts[i]) continue;
      if (i > 0 && filled[i - 1] <= filled[i]) continue;
      ++filled[i];
      total += rec(remaining - 1);
      --filled[i];
    }
    return total;
  };
  return rec(lambda.size());
}

/// q^{b(lambda)} [n]_q! / prod_cells [h(c)]_q with b(lambda) = sum (i-1) lambda_i.
inline FakeDegree fake_degree(const Partition& lambda) {
  QPoly denominator(1);
  for (const auto& row : hook_lengths(lambda))
    for (int h : row) denominator = denominator * q_integer(h);
  int b = 0;
  for (int i = 0; i < lambda.length(); ++i) b += i * lambda[static_cast<std::size_t>(i)];
  QPoly poly = divide_exact(q_factorial(lambda.size()), denominator) * QPoly::monomial(b, 1);
  return {lambda, std::move(poly)};
}

inline std::vector<FakeDegree> fake_degrees(int n) {
  std::vector<FakeDegree> out;
  for (const auto& lambda : partitions(n)) out.push_back(fake_degree(lambda));
  return out;
}

/// sum over S_n of q^{maj(w) + maj(w^-1)}
inline QPoly bimahonian(int n) {
  if (n > kMaxSymmetricRank) throw SizeError("S_" + std::to_string(n) + " exceeds the enumeration cap");
  std::vector<Integer> counts(static_cast<std::size_t>(n * (n - 1) + 1));
  for_each_permutation(n, [&](const Permutation& w) { ++counts[static_cast<std::size_t>(maj(w) + maj(inverse(w)))]; });
  return QPoly::from_dense(counts);
}

/// Checks, for S_n:
///   sum f(1) f(q) = [n]_q! = graded character of the identity on H*(G/T)
///   sum f(q)^2    = sum_w q^{maj(w) + maj(w^-1)} = E_com numerator of U(n) at q = t^2
inline std::vector<CheckReport> verify_fake_degree_identities(int n) {
  if (n < 1) throw std::invalid_argument("verify_fake_degree_identities: n must be >= 1");
  if (n > kMaxSymmetricRank) throw SizeError("S_" + std::to_string(n) + " exceeds the enumeration cap");
  const auto degrees = fake_degrees(n);
  QPoly regular, square;
  for (const auto& f : degrees) {
    regular = regular + f.poly * QPoly::monomial(0, f.poly.eval_at_one());
    square = square + f.poly * f.poly;
  }
  const std::string tag = " n=" + std::to_string(n);
  std::vector<CheckReport> out;

  auto compare = [&](const std::string& name, const QPoly& lhs, const QPoly& rhs, const std::string& var = "q") {
    CheckReport r{name + tag, lhs == rhs, -1, ""};
    if (!r.passed) {
      for (int d = 0; d <= std::max(lhs.degree(), rhs.degree()); ++d)
        if (lhs.coeff(d) != rhs.coeff(d)) {
          r.first_mismatch = d;
          break;
        }
      r.detail = lhs.to_string(var) + " != " + rhs.to_string(var);
    } else {
      r.detail = lhs.to_string(var);
    }
    out.push_back(std::move(r));
  };

  const QPoly qfact = q_factorial(n);
  compare("fakedeg regular", regular, qfact);

  const GroupSpec u(Family::U, n);
  const TruncatedSeries id_char =
      coinvariant_char(u, CycleData{std::vector<int>(static_cast<std::size_t>(n), 1), {}}, qfact.degree());
  compare("fakedeg identity character", QPoly::from_dense(id_char.coeffs()), qfact);

  const QPoly maj_sum = bimahonian(n);
  compare("fakedeg bimahonian", square, maj_sum);
  compare("fakedeg ecom numerator", square.scale_exponents(2), ecom_numerator(u), "t");
  return out;
}

}  // namespace comlie
