#pragma once

// Exact univariate polynomials, truncated power series, and rational series
// whose denominators are products of (1 - t^e)^m.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace comlie {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sparse polynomial in one variable with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) coeffs_[0] = constant;
  }

  static QPoly monomial(int exponent, const Integer& c = 1) {
    QPoly p;
    p.add_term(exponent, c);
    return p;
  }

  /// Builds sum_i coeffs[i] t^i.
  static QPoly from_dense(const std::vector<Integer>& coeffs) {
    QPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<int>(i), coeffs[i]);
    return p;
  }

  void add_term(int exponent, const Integer& c) {
    if (exponent < 0) throw std::invalid_argument("QPoly: negative exponent");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  Integer coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Integer(0) : it->second;
  }

  const std::map<int, Integer>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  int low_degree() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first; }
  Integer leading_coeff() const { return coeffs_.empty() ? Integer(0) : coeffs_.rbegin()->second; }

  Integer eval_at_one() const {
    Integer s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
  }

  /// Substitutes t -> t^k.
  QPoly scale_exponents(int k) const {
    QPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e * k] = c;
    return out;
  }

  /// True if c_e = c_{center2 - e} for all e, where center2 is twice the
  /// center of symmetry.
  bool is_palindromic(int center2) const {
    for (const auto& [e, c] : coeffs_)
      if (coeff(center2 - e) != c) return false;
    return true;
  }

  bool all_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
  }

  QPoly& operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly out;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

  /// Human-readable form, e.g. "1 + t^4 + 2t^6".
  std::string to_string(const std::string& var = "t") const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      Integer mag = abs(c);
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        s += mag.get_str();
        continue;
      }
      if (mag != 1) s += mag.get_str();
      s += var;
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::map<int, Integer> coeffs_;
};

inline Integer eval_at_one(const QPoly& p) { return p.eval_at_one(); }

/// Exact polynomial division; throws if the divisor does not divide.
inline QPoly divide_exact(QPoly numerator, const QPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("divide_exact: division by zero");
  const int dd = divisor.degree();
  const Integer lead = divisor.leading_coeff();
  QPoly quotient;
  while (!numerator.is_zero() && numerator.degree() >= dd) {
    const int shift = numerator.degree() - dd;
    const Integer top = numerator.leading_coeff();
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("divide_exact: non-integral quotient");
    const Integer q = top / lead;
    quotient.add_term(shift, q);
    numerator -= QPoly::monomial(shift, q) * divisor;
  }
  if (!numerator.is_zero()) throw std::domain_error("divide_exact: nonzero remainder");
  return quotient;
}

/// [k]_q = 1 + q + ... + q^{k-1}.
inline QPoly q_integer(int k) {
  QPoly p;
  for (int i = 0; i < k; ++i) p.add_term(i, 1);
  return p;
}

/// [k]_q! = [1]_q [2]_q ... [k]_q.
inline QPoly q_factorial(int k) {
  QPoly p = 1;
  for (int i = 2; i <= k; ++i) p *= q_integer(i);
  return p;
}

// ---------------------------------------------------------------------------

/// Dense power series c_0 + c_1 t + ... + c_D t^D, exact through degree D.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1) {}
  explicit TruncatedSeries(int trunc) : coeffs_(checked_length(trunc)) {}
  explicit TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
  }

  static TruncatedSeries from_poly(const QPoly& p, int trunc) {
    TruncatedSeries s(trunc);
    for (const auto& [e, c] : p.terms())
      if (e <= trunc) s.coeffs_[static_cast<std::size_t>(e)] = c;
    return s;
  }

  static TruncatedSeries one(int trunc) {
    TruncatedSeries s(trunc);
    s.coeffs_[0] = 1;
    return s;
  }

  int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Integer& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  /// Multiplies in place by (1 - t^e).
  TruncatedSeries& multiply_one_minus(int e) {
    for (int k = trunc(); k >= e; --k) coeffs_[static_cast<std::size_t>(k)] -= coeffs_[static_cast<std::size_t>(k - e)];
    return *this;
  }
  /// Multiplies in place by (1 + t^e).
  TruncatedSeries& multiply_one_plus(int e) {
    for (int k = trunc(); k >= e; --k) coeffs_[static_cast<std::size_t>(k)] += coeffs_[static_cast<std::size_t>(k - e)];
    return *this;
  }
  /// Divides in place by (1 - t^e).
  TruncatedSeries& divide_one_minus(int e) {
    if (e < 1) throw std::invalid_argument("divide_one_minus: exponent must be >= 1");
    for (int k = e; k <= trunc(); ++k) coeffs_[static_cast<std::size_t>(k)] += coeffs_[static_cast<std::size_t>(k - e)];
    return *this;
  }
  /// Divides in place by (1 + t^e).
  TruncatedSeries& divide_one_plus(int e) {
    if (e < 1) throw std::invalid_argument("divide_one_plus: exponent must be >= 1");
    for (int k = e; k <= trunc(); ++k) coeffs_[static_cast<std::size_t>(k)] -= coeffs_[static_cast<std::size_t>(k - e)];
    return *this;
  }

  /// Substitutes t -> t^k, keeping the truncation degree k * trunc().
  TruncatedSeries scale_exponents(int k) const {
    TruncatedSeries out(trunc() * k);
    for (int i = 0; i <= trunc(); ++i) out.coeffs_[static_cast<std::size_t>(i * k)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
  }

  TruncatedSeries truncated(int new_trunc) const {
    if (new_trunc > trunc()) throw std::invalid_argument("truncated: cannot extend precision");
    return TruncatedSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + new_trunc + 1));
  }

  bool all_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_trunc(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_trunc(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_trunc(b);
    TruncatedSeries out(a.trunc());
    const int d = a.trunc();
    for (int i = 0; i <= d; ++i) {
      if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; i + j <= d; ++j)
        out.coeffs_[static_cast<std::size_t>(i + j)] += a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return out;
  }

  bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

  /// Index of the first differing coefficient, or -1 if equal. Both series
  /// must share a truncation degree.
  int first_mismatch(const TruncatedSeries& o) const {
    require_same_trunc(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != o.coeffs_[i]) return static_cast<int>(i);
    return -1;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ',';
      s += coeffs_[i].get_str();
    }
    return s;
  }

 private:
  static std::size_t checked_length(int trunc) {
    if (trunc < 0) throw std::invalid_argument("truncation degree must be >= 0");
    return static_cast<std::size_t>(trunc) + 1;
  }
  void require_same_trunc(const TruncatedSeries& o) const {
    if (o.trunc() != trunc())
      throw std::invalid_argument("truncated series degree mismatch: " + std::to_string(trunc()) + " vs " +
                                  std::to_string(o.trunc()));
  }

  std::vector<Integer> coeffs_;
};

// ---------------------------------------------------------------------------

/// numerator / prod_e (1 - t^e)^{m_e}, denominators kept in factored form.
class RationalSeries {
 public:
  RationalSeries() : numerator_(1) {}
  explicit RationalSeries(QPoly numerator, std::map<int, int> denominator = {})
      : numerator_(std::move(numerator)) {
    for (const auto& [e, m] : denominator) add_denominator_factor(e, m);
  }

  void add_denominator_factor(int exponent, int multiplicity = 1) {
    if (exponent < 1) throw std::invalid_argument("denominator factor exponent must be >= 1");
    if (multiplicity < 0) throw std::invalid_argument("denominator multiplicity must be >= 0");
    if (multiplicity == 0) return;
    denominator_[exponent] += multiplicity;
  }

  const QPoly& numerator() const { return numerator_; }
  /// exponent -> multiplicity.
  const std::map<int, int>& denominator_factors() const { return denominator_; }

  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries out(a.numerator_ * b.numerator_, a.denominator_);
    for (const auto& [e, m] : b.denominator_) out.add_denominator_factor(e, m);
    return out;
  }

  bool operator==(const RationalSeries&) const = default;

  std::string to_string(const std::string& var = "t") const {
    std::string s = "(" + numerator_.to_string(var) + ")";
    if (denominator_.empty()) return s;
    s += " / (";
    bool first = true;
    for (const auto& [e, m] : denominator_) {
      if (!first) s += " ";
      first = false;
      s += "(1 - " + var + (e == 1 ? "" : "^" + std::to_string(e)) + ")";
      if (m != 1) s += "^" + std::to_string(m);
    }
    return s + ")";
  }

 private:
  QPoly numerator_;
  std::map<int, int> denominator_;
};

/// Coefficient-exact expansion of s through degree D.
inline TruncatedSeries expand(const RationalSeries& s, int trunc) {
  TruncatedSeries out = TruncatedSeries::from_poly(s.numerator(), trunc);
  for (const auto& [e, m] : s.denominator_factors())
    for (int i = 0; i < m; ++i) out.divide_one_minus(e);
  return out;
}

/// Multiplies a truncated series by the denominator of s, i.e. undoes expand.
inline TruncatedSeries multiply_by_denominator(TruncatedSeries series, const RationalSeries& s) {
  for (const auto& [e, m] : s.denominator_factors())
    for (int i = 0; i < m; ++i) series.multiply_one_minus(e);
  return series;
}

/// prod_d (1 - t^d)^{-m_d}: the Hilbert series of a free commutative algebra
/// with m_d generators in degree d.
inline TruncatedSeries product_series(const std::map<int, int>& weights, int trunc) {
  TruncatedSeries out = TruncatedSeries::one(trunc);
  for (const auto& [d, m] : weights) {
    if (d < 1) throw std::invalid_argument("product_series: generator degree must be >= 1");
    if (m < 0) throw std::invalid_argument("product_series: negative multiplicity");
    for (int i = 0; i < m && d <= trunc; ++i) out.divide_one_minus(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON: {"var":"t","trunc":D,"coeffs":[c0,...,cD]} with exact decimal integers,
// optionally followed by string/integer metadata fields.

struct SeriesMetadata {
  std::string family;
  int n = 0;
  std::string quantity;
};

inline std::string to_json(const TruncatedSeries& s, const SeriesMetadata* meta = nullptr) {
  std::string out = "{\"var\":\"t\",\"trunc\":" + std::to_string(s.trunc()) + ",\"coeffs\":[";
  out += s.to_string();
  out += "]";
  if (meta) {
    out += ",\"family\":" + nlohmann::json(meta->family).dump();
    out += ",\"n\":" + std::to_string(meta->n);
    out += ",\"quantity\":" + nlohmann::json(meta->quantity).dump();
  }
  out += "}";
  return out;
}

namespace detail {

// SAX handler that keeps integer literals as decimal text so coefficients
// beyond 64 bits survive parsing.
class SeriesSax : public nlohmann::json_sax<nlohmann::json> {
 public:
  std::string var;
  long long trunc = -1;
  bool has_trunc = false;
  bool has_coeffs = false;
  std::vector<Integer> coeffs;
  SeriesMetadata meta;
  std::string error;

  bool null() override { return top_level_value("null"); }
  bool boolean(bool) override { return top_level_value("boolean"); }
  bool number_integer(number_integer_t v) override { return integer(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return integer(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& raw) override {
    // Integers too large for 64 bits arrive here with their exact text.
    if (!raw.empty() && std::all_of(raw.begin() + (raw[0] == '-' ? 1 : 0), raw.end(),
                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return integer(raw);
    return fail("non-integer number " + raw);
  }
  bool string(string_t& val) override {
    if (depth_ != 1) return fail("unexpected string");
    if (key_ == "var") var = val;
    else if (key_ == "family") meta.family = val;
    else if (key_ == "quantity") meta.quantity = val;
    return true;
  }
  bool binary(binary_t&) override { return fail("binary value"); }
  bool start_object(std::size_t) override {
    if (depth_ != 0) return fail("nested object");
    ++depth_;
    return true;
  }
  bool key(string_t& val) override {
    key_ = val;
    return true;
  }
  bool end_object() override {
    --depth_;
    return true;
  }
  bool start_array(std::size_t) override {
    if (depth_ != 1 || key_ != "coeffs") return fail("unexpected array");
    in_coeffs_ = true;
    has_coeffs = true;
    return true;
  }
  bool end_array() override {
    in_coeffs_ = false;
    return true;
  }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& ex) override {
    return fail("parse error at " + std::to_string(pos) + ": " + ex.what());
  }

 private:
  bool integer(const std::string& text) {
    if (in_coeffs_) {
      coeffs.emplace_back(text, 10);
      return true;
    }
    if (depth_ != 1) return fail("unexpected number");
    if (key_ == "trunc") {
      trunc = std::stoll(text);
      has_trunc = true;
    } else if (key_ == "n") {
      meta.n = std::stoi(text);
    }
    return true;
  }
  bool top_level_value(const char* what) {
    if (depth_ == 1 && !in_coeffs_) return true;
    return fail(std::string("unexpected ") + what);
  }
  bool fail(std::string msg) {
    if (error.empty()) error = std::move(msg);
    return false;
  }

  int depth_ = 0;
  bool in_coeffs_ = false;
  std::string key_;
};

}  // namespace detail

/// Parses the series JSON schema; metadata (if present) is written to meta.
inline TruncatedSeries series_from_json(const std::string& text, SeriesMetadata* meta = nullptr) {
  detail::SeriesSax sax;
  const bool ok = nlohmann::json::sax_parse(text, &sax);
  if (!ok) throw std::invalid_argument("series JSON: " + (sax.error.empty() ? std::string("malformed") : sax.error));
  if (sax.var != "t") throw std::invalid_argument("series JSON: var must be \"t\"");
  if (!sax.has_trunc || !sax.has_coeffs) throw std::invalid_argument("series JSON: missing trunc or coeffs");
  if (static_cast<long long>(sax.coeffs.size()) != sax.trunc + 1)
    throw std::invalid_argument("series JSON: coeffs length does not match trunc");
  if (meta) *meta = sax.meta;
  return TruncatedSeries(std::move(sax.coeffs));
}

}  // namespace comlie
