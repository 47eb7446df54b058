#pragma once

// Molien-type oracle for the Poincare series of E_com G and B_com G: graded
// characters of the coinvariant algebra H*(G/T) averaged over the Weyl group.
//
// All series here are computed in s = t^2 (deg x_i = 1) and converted to the
// cohomological variable t at the very end.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "group.hpp"
#include "partition.hpp"
#include "qseries.hpp"
#include "weyl.hpp"

namespace comlie {

/// Raised when an averaged Weyl sum fails to be integral.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A conjugacy class of W, labelled by its cycle data.
struct WeylClass {
  CycleData cycles;
  Integer size;
};

enum class Summation { by_class, by_element };

/// Largest rank accepted by the class-indexed oracle.
inline constexpr int kMaxOracleRank = 40;

namespace detail {

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order in S_n.
inline Integer centralizer_order(const Partition& lambda) {
  Integer z = 1;
  for (const auto& [part, mult] : lambda.multiplicities()) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mult));
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(mult));
    z *= f * p;
  }
  return z;
}

}  // namespace detail

inline std::vector<WeylClass> weyl_classes(const GroupSpec& g) {
  if (g.n > kMaxOracleRank) throw SizeError(g.name() + " exceeds the oracle rank cap");
  std::vector<WeylClass> out;
  const Integer order = g.weyl_order();
  if (g.weyl_kind() == WeylKind::symmetric) {
    for (const auto& lambda : partitions(g.n))
      out.push_back({CycleData{lambda.parts(), {}}, order / detail::centralizer_order(lambda)});
    return out;
  }
  // B_n: pairs (positive cycle type, negative cycle type); the centralizer of
  // a class has order z_{lambda+} z_{lambda-} 2^{l(lambda+) + l(lambda-)}.
  for (int k = g.n; k >= 0; --k) {
    for (const auto& pos : partitions(k)) {
      for (const auto& negc : partitions(g.n - k)) {
        Integer z = detail::centralizer_order(pos) * detail::centralizer_order(negc);
        z <<= static_cast<mp_bitcnt_t>(pos.length() + negc.length());
        out.push_back({CycleData{pos.parts(), negc.parts()}, order / z});
      }
    }
  }
  return out;
}

namespace detail {

inline void check_cycle_data(const GroupSpec& g, const CycleData& c) {
  if (c.total() != g.n)
    throw std::invalid_argument("cycle data of total length " + std::to_string(c.total()) + " for " + g.name());
  if (g.weyl_kind() == WeylKind::symmetric && !c.negative_cycles.empty())
    throw std::invalid_argument("negative cycles are impossible in the Weyl group of " + g.name());
  for (int len : c.positive_cycles)
    if (len < 1) throw std::invalid_argument("cycle lengths must be positive");
  for (int len : c.negative_cycles)
    if (len < 1) throw std::invalid_argument("cycle lengths must be positive");
}

/// Divides by det(1 - s M_w) on the reflection representation of W. For SU(n)
/// that is the permutation representation with its trivial summand removed.
inline void divide_by_det(TruncatedSeries& series, const GroupSpec& g, const CycleData& c) {
  for (int len : c.positive_cycles) series.divide_one_minus(len);
  for (int len : c.negative_cycles) series.divide_one_plus(len);
  if (g.family == Family::SU) series.multiply_one_minus(1);
}

inline TruncatedSeries to_t_grading(const TruncatedSeries& in_s, int trunc_t) {
  TruncatedSeries out(trunc_t);
  for (int k = 0; 2 * k <= trunc_t; ++k) out[2 * k] = in_s[k];
  return out;
}

inline TruncatedSeries divide_by_order(TruncatedSeries sum, const Integer& order, const std::string& what) {
  for (int k = 0; k <= sum.trunc(); ++k) {
    if (!mpz_divisible_p(sum[k].get_mpz_t(), order.get_mpz_t()))
      throw IntegrityError(what + ": coefficient " + sum[k].get_str() + " at s^" + std::to_string(k) +
                           " is not divisible by |W| = " + order.get_str());
    mpz_divexact(sum[k].get_mpz_t(), sum[k].get_mpz_t(), order.get_mpz_t());
  }
  return sum;
}

template <typename Term>
TruncatedSeries weyl_average(const GroupSpec& g, int trunc_s, Summation how, Term&& term, const std::string& what) {
  TruncatedSeries sum(trunc_s);
  if (how == Summation::by_class) {
    for (const auto& cls : weyl_classes(g)) {
      TruncatedSeries t = term(cls.cycles);
      for (int k = 0; k <= trunc_s; ++k) t[k] *= cls.size;
      sum += t;
    }
  } else if (g.weyl_kind() == WeylKind::symmetric) {
    for_each_permutation(g.n, [&](const Permutation& w) { sum += term(cycle_data(w)); });
  } else {
    for_each_signed_permutation(g.n, [&](const SignedPermutation& w) { sum += term(cycle_data(w)); });
  }
  return divide_by_order(std::move(sum), g.weyl_order(), what);
}

}  // namespace detail

/// Graded trace of w on the coinvariant algebra,
/// prod_i (1 - s^{d_i}) / det(1 - s M_w), truncated at s-degree trunc_s.
inline TruncatedSeries coinvariant_char(const GroupSpec& g, const CycleData& c, int trunc_s) {
  detail::check_cycle_data(g, c);
  TruncatedSeries series = TruncatedSeries::one(trunc_s);
  for (int d : g.invariant_degrees()) series.multiply_one_minus(d);
  detail::divide_by_det(series, g, c);
  return series;
}

/// Hilbert series of (H*(G/T) (x) H*(G/T))^W in the t grading.
inline TruncatedSeries oracle_ecom(const GroupSpec& g, int trunc_t, Summation how = Summation::by_class) {
  if (trunc_t < 0) throw std::invalid_argument("truncation degree must be >= 0");
  const int trunc_s = trunc_t / 2;
  auto term = [&](const CycleData& c) {
    const TruncatedSeries ch = coinvariant_char(g, c, trunc_s);
    return ch * ch;
  };
  return detail::to_t_grading(detail::weyl_average(g, trunc_s, how, term, "oracle_ecom " + g.name()), trunc_t);
}

/// Hilbert series of (H*(G/T) (x) H*(BT))^W in the t grading.
inline TruncatedSeries oracle_bcom(const GroupSpec& g, int trunc_t, Summation how = Summation::by_class) {
  if (trunc_t < 0) throw std::invalid_argument("truncation degree must be >= 0");
  const int trunc_s = trunc_t / 2;
  auto term = [&](const CycleData& c) {
    TruncatedSeries ch = coinvariant_char(g, c, trunc_s);
    detail::divide_by_det(ch, g, c);
    return ch;
  };
  return detail::to_t_grading(detail::weyl_average(g, trunc_s, how, term, "oracle_bcom " + g.name()), trunc_t);
}

}  // namespace comlie
