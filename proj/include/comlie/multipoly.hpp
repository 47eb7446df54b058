#pragma once

// Sparse polynomials over Q in two blocks of variables x_1..x_n, y_1..y_n.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace comlie {

/// Exponent vector laid out as (a_1..a_n, b_1..b_n) for x^a y^b.
using Monomial = std::vector<std::uint8_t>;

class MultiPoly {
 public:
  using Coefficient = mpq_class;

  explicit MultiPoly(int n = 1) : n_(n) {
    if (n < 1) throw std::invalid_argument("MultiPoly: variable count must be >= 1");
  }

  static MultiPoly constant(int n, const Coefficient& c) {
    MultiPoly p(n);
    p.add_term(Monomial(2 * static_cast<std::size_t>(n), 0), c);
    return p;
  }

  /// prod_i x_i^{xs[i]} y_i^{ys[i]}; either list may be shorter than n.
  static MultiPoly monomial(int n, const std::vector<int>& xs, const std::vector<int>& ys,
                            const Coefficient& c = 1) {
    if (static_cast<int>(xs.size()) > n || static_cast<int>(ys.size()) > n)
      throw std::invalid_argument("MultiPoly::monomial: too many exponents");
    Monomial m(2 * static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < xs.size(); ++i) m[i] = checked_exponent(xs[i]);
    for (std::size_t i = 0; i < ys.size(); ++i) m[static_cast<std::size_t>(n) + i] = checked_exponent(ys[i]);
    MultiPoly p(n);
    p.add_term(std::move(m), c);
    return p;
  }

  /// x_i for 1 <= i <= n.
  static MultiPoly x(int n, int i) { return variable(n, i - 1); }
  /// y_i for 1 <= i <= n.
  static MultiPoly y(int n, int i) { return variable(n, n + i - 1); }

  int num_vars() const { return n_; }
  const std::map<Monomial, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  Coefficient coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

  void add_term(Monomial m, const Coefficient& c) {
    if (m.size() != 2 * static_cast<std::size_t>(n_)) throw std::invalid_argument("MultiPoly: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static int x_degree(const Monomial& m) {
    int d = 0;
    for (std::size_t i = 0; i < m.size() / 2; ++i) d += m[i];
    return d;
  }
  static int y_degree(const Monomial& m) {
    int d = 0;
    for (std::size_t i = m.size() / 2; i < m.size(); ++i) d += m[i];
    return d;
  }
  static int total_degree(const Monomial& m) { return x_degree(m) + y_degree(m); }

  /// Total degree of a homogeneous polynomial, -1 for zero; throws if the
  /// polynomial is not homogeneous.
  int homogeneous_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      const int e = total_degree(m);
      if (d >= 0 && e != d) throw std::domain_error("MultiPoly: not homogeneous");
      d = e;
    }
    return d;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    require_same_n(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    require_same_n(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const Coefficient& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Coefficient& s) { return a *= s; }
  friend MultiPoly operator*(const Coefficient& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_n(b);
    MultiPoly out(a.n_);
    Monomial prod(2 * static_cast<std::size_t>(a.n_));
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = checked_exponent(ma[i] + mb[i]);
        out.add_term(prod, ca * cb);
      }
    }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  /// e.g. "1/6*x1*y2 + 1/6*x1*y3 + ..."
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Coefficient mag = abs(c);
      s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      first = false;
      std::string mono;
      for (int i = 0; i < 2 * n_; ++i) {
        const int e = m[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += (i < n_ ? "x" : "y") + std::to_string(i < n_ ? i + 1 : i - n_ + 1);
        if (e > 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty()) {
        s += mag.get_str();
      } else {
        if (mag != 1) s += mag.get_str() + "*";
        s += mono;
      }
    }
    return s;
  }

 private:
  static std::uint8_t checked_exponent(int e) {
    if (e < 0 || e > 255) throw std::overflow_error("MultiPoly: exponent out of range");
    return static_cast<std::uint8_t>(e);
  }

  static MultiPoly variable(int n, int slot) {
    if (slot < 0 || slot >= 2 * n) throw std::out_of_range("MultiPoly: variable index out of range");
    Monomial m(2 * static_cast<std::size_t>(n), 0);
    m[static_cast<std::size_t>(slot)] = 1;
    MultiPoly p(n);
    p.add_term(std::move(m), 1);
    return p;
  }

  void require_same_n(const MultiPoly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  }

  int n_;
  std::map<Monomial, Coefficient> terms_;
};

}  // namespace comlie
