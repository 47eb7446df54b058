#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "weyl.hpp"

namespace comlie {

enum class Family { U, SU, Sp };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::U: return "u";
    case Family::SU: return "su";
    case Family::Sp: return "sp";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "u" || s == "U") return Family::U;
  if (s == "su" || s == "SU") return Family::SU;
  if (s == "sp" || s == "Sp" || s == "SP") return Family::Sp;
  throw std::invalid_argument("unknown group family '" + s + "' (expected u, su or sp)");
}

/// One of U(n), SU(n), Sp(n) together with its Weyl data.
struct GroupSpec {
  Family family = Family::U;
  int n = 1;

  GroupSpec() = default;
  GroupSpec(Family f, int rank) : family(f), n(rank) {
    if (rank < 1) throw std::invalid_argument("group rank must be >= 1");
  }

  WeylKind weyl_kind() const { return family == Family::Sp ? WeylKind::hyperoctahedral : WeylKind::symmetric; }

  mpz_class weyl_order() const {
    mpz_class order;
    mpz_fac_ui(order.get_mpz_t(), static_cast<unsigned long>(n));
    if (family == Family::Sp) order <<= static_cast<mp_bitcnt_t>(n);
    return order;
  }

  /// Degrees of the basic Weyl invariants in polynomial grading
  /// (deg x_i = 1); the cohomological degree is twice this.
  std::vector<int> invariant_degrees() const {
    std::vector<int> d;
    switch (family) {
      case Family::U:
        for (int i = 1; i <= n; ++i) d.push_back(i);
        break;
      case Family::SU:
        for (int i = 2; i <= n; ++i) d.push_back(i);
        break;
      case Family::Sp:
        for (int i = 1; i <= n; ++i) d.push_back(2 * i);
        break;
    }
    return d;
  }

  /// Exponents e of the factors (1 - t^e) in the Poincare series of BG.
  std::vector<int> bg_exponents() const {
    std::vector<int> e = invariant_degrees();
    for (int& v : e) v *= 2;
    return e;
  }

  /// Cohomological degree of the fundamental class of E_com G.
  int top_ecom_degree() const { return family == Family::Sp ? 4 * n * n : 2 * n * (n - 1); }

  std::string name() const {
    const char* f = family == Family::U ? "U" : family == Family::SU ? "SU" : "Sp";
    return std::string(f) + "(" + std::to_string(n) + ")";
  }

  bool operator==(const GroupSpec&) const = default;
};

}  // namespace comlie
