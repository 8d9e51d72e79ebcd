#pragma once

// Laurent polynomials in q with exact rational coefficients, kept in the
// canonical form "no stored zero coefficients".

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gkmq/rational.hpp"

namespace gkmq {

class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return constant(BigRational(1)); }

  static LaurentPoly constant(const BigRational& c) {
    LaurentPoly p;
    p.set(0, c);
    return p;
  }

  static LaurentPoly q_power(long e, const BigRational& c = BigRational(1)) {
    LaurentPoly p;
    p.set(e, c);
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }

  BigRational coeff(long e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? BigRational(0) : it->second;
  }

  const std::map<long, BigRational>& terms() const { return coeffs_; }

  long min_exp() const {
    if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
  }
  long max_exp() const {
    if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
  }

  void set(long e, const BigRational& c) {
    if (gkmq::is_zero(c))
      coeffs_.erase(e);
    else
      coeffs_[e] = c;
  }

  void add_term(long e, const BigRational& c) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      if (!gkmq::is_zero(c)) coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (gkmq::is_zero(it->second)) coeffs_.erase(it);
    }
  }

  LaurentPoly operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const BigRational& c) const {
    LaurentPoly out;
    if (gkmq::is_zero(c)) return out;
    for (const auto& [e, k] : coeffs_) out.coeffs_.emplace(e, k * c);
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ < b.coeffs_; }

  // q -> -q: the exponent-e coefficient picks up (-1)^e.
  LaurentPoly substitute_neg_q() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, (e % 2 == 0) ? c : -c);
    return out;
  }

  // q -> q^-1 (the bar involution on exponents).
  LaurentPoly substitute_inv_q() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(-e, c);
    return out;
  }

  BigRational evaluate(const BigRational& q0) const {
    if (gkmq::is_zero(q0)) throw std::domain_error("evaluate: q0 must be nonzero");
    BigRational acc(0);
    for (const auto& [e, c] : coeffs_) acc += c * rational_pow(q0, e);
    return acc;
  }

  // Exact division: *this = d * quotient with zero remainder, else throws.
  LaurentPoly div_exact(const LaurentPoly& d) const {
    LaurentPoly quot, rem;
    if (!divmod(*this, d, quot, rem) || !rem.is_zero())
      throw std::domain_error("div_exact: division is not exact");
    return quot;
  }

  // Division after shifting both operands to ordinary polynomials:
  // num = den*quot + q^{num.min_exp} * R with deg R < deg(shifted den).
  // Returns false only if den is zero.
  static bool divmod(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly& quot,
                     LaurentPoly& rem) {
    if (den.is_zero()) return false;
    quot = LaurentPoly();
    rem = LaurentPoly();
    if (num.is_zero()) return true;
    const long na = num.min_exp(), da = den.min_exp();
    LaurentPoly n = num.shifted(-na);  // ordinary polynomial, constant term != 0
    const LaurentPoly d = den.shifted(-da);
    const long dlead = d.max_exp();
    const BigRational dc = d.coeff(dlead);
    while (!n.is_zero() && n.max_exp() >= dlead) {
      const long e = n.max_exp() - dlead;
      const BigRational c = n.coeff(n.max_exp()) / dc;
      quot.add_term(e, c);
      n -= d.scaled(c).shifted(e);
    }
    quot = quot.shifted(na - da);
    rem = n.shifted(na);
    return true;
  }

  LaurentPoly shifted(long e) const {
    LaurentPoly out;
    for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k + e, c);
    return out;
  }

  // Canonical text form, highest exponent first: "q^3 + 2*q + q^-1 - 3".
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      const long e = it->first;
      BigRational c = it->second;
      if (first) {
        if (sgn(c) < 0) {
          os << "-";
          c = -c;
        }
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
        if (sgn(c) < 0) c = -c;
      }
      first = false;
      const bool unit_coeff = (c == 1);
      if (e == 0) {
        os << c.get_str();
      } else {
        if (!unit_coeff) os << c.get_str() << "*";
        os << "q";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  std::map<long, BigRational> coeffs_;
};

inline LaurentPoly operator*(const BigRational& c, const LaurentPoly& p) { return p.scaled(c); }

}  // namespace gkmq
