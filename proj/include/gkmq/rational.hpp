#pragma once

// Exact scalar foundation: arbitrary-precision integers and rationals.
// Backed by GMP; rationals are kept canonical (denominator > 0, reduced).

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gkmq {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigRational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

inline const BigInt& numerator(const BigRational& r) { return r.get_num(); }
inline const BigInt& denominator(const BigRational& r) { return r.get_den(); }

inline bool is_zero(const BigRational& r) { return sgn(r) == 0; }

inline BigInt factorial(unsigned long n) {
  BigInt f = 1;
  for (unsigned long k = 2; k <= n; ++k) f *= static_cast<long>(k);
  return f;
}

inline BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline BigRational rational_pow(const BigRational& base, long e) {
  if (e == 0) return BigRational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("rational_pow: 0 to a negative power");
    return BigRational(0);
  }
  unsigned long a = static_cast<unsigned long>(std::labs(e));
  BigRational r = make_rational(int_pow(numerator(base), a), int_pow(denominator(base), a));
  if (e < 0) r = BigRational(1) / r;
  return r;
}

inline BigInt int_lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const BigRational& r) { return r.get_str(); }

inline BigRational rational_from_string(const std::string& s) {
  BigRational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("rational_from_string: bad literal '" + s + "'");
  r.canonicalize();
  return r;
}

// Minimal field interface used by the generic linear algebra and polynomial
// layers. Specialised for BigRational here and for RatFunc in ratfunc.hpp.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<BigRational> {
  static BigRational zero() { return BigRational(0); }
  static BigRational one() { return BigRational(1); }
  static bool is_zero(const BigRational& x) { return sgn(x) == 0; }
  static BigRational from_long(long n) { return BigRational(n); }
  // q^e only exists in rings that actually contain q.
  static BigRational q_power(long e) {
    if (e != 0) throw std::domain_error("BigRational scalar has no q to raise");
    return BigRational(1);
  }
  static std::string str(const BigRational& x) { return x.get_str(); }
};

}  // namespace gkmq
