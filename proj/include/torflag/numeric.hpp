#pragma once

// Exact integer and rational types, checked machine-word arithmetic, and
// small number-theoretic helpers (primality, factorization, decimal parsing).

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace torflag {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown by the int64 fast paths when a result would not fit; callers
/// retry the same computation with BigInt.
struct ArithmeticOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

namespace arith {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 add");
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 sub");
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 mul");
  return r;
}
inline std::int64_t abs(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow("int64 abs");
  return a < 0 ? -a : a;
}
// Truncating division; the divisor is never zero at call sites.
inline std::int64_t quot(std::int64_t a, std::int64_t b) {
  if (b == -1 && a == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow("int64 div");
  return a / b;
}
inline bool divides(std::int64_t d, std::int64_t a) { return a % d == 0; }
inline bool is_zero(std::int64_t a) { return a == 0; }
inline bool is_unit(std::int64_t a) { return a == 1 || a == -1; }
inline BigInt to_big(std::int64_t a) { return BigInt(static_cast<long>(a)); }

inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt abs(const BigInt& a) { return ::abs(a); }
inline BigInt quot(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline bool divides(const BigInt& d, const BigInt& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}
inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }
inline bool is_unit(const BigInt& a) { return a == 1 || a == -1; }
inline const BigInt& to_big(const BigInt& a) { return a; }

}  // namespace arith

inline bool fits_int64(const BigInt& v) { return v.fits_slong_p() && sizeof(long) == 8; }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

/// Distinct prime divisors of |v| (v != 0), ascending. Trial division;
/// torsion coefficients met in practice are small.
inline std::vector<BigInt> prime_divisors(BigInt v) {
  std::vector<BigInt> out;
  v = ::abs(v);
  if (v <= 1) return out;
  for (BigInt d = 2; d * d <= v; d = (d == 2 ? BigInt(3) : BigInt(d + 2))) {
    if (arith::divides(d, v)) {
      out.push_back(d);
      while (arith::divides(d, v)) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

/// Parses a nonnegative decimal ("0.5", "1", "3/10" also accepted) into an
/// exact rational. Throws std::invalid_argument on malformed input.
inline Rational parse_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational r;
    if (r.set_str(std::string(text), 10) != 0)
      throw std::invalid_argument("malformed fraction: " + std::string(text));
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
  }
  std::string digits;
  std::size_t frac_digits = 0;
  bool seen_point = false;
  for (char ch : text) {
    if (ch == '.') {
      if (seen_point) throw std::invalid_argument("malformed decimal: " + std::string(text));
      seen_point = true;
    } else if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (seen_point) ++frac_digits;
    } else {
      throw std::invalid_argument("malformed decimal: " + std::string(text));
    }
  }
  if (digits.empty()) throw std::invalid_argument("malformed decimal: " + std::string(text));
  BigInt num(digits, 10);
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Field characteristic: 0 (the rationals) or a prime.
class Characteristic {
 public:
  Characteristic() = default;
  explicit Characteristic(std::uint64_t value) : value_(value) {
    if (value != 0 && !is_prime(value))
      throw std::invalid_argument("characteristic must be 0 or prime, got " + std::to_string(value));
    if (value > (std::uint64_t{1} << 31))
      throw std::invalid_argument("prime characteristic must be below 2^31");
  }
  std::uint64_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  friend auto operator<=>(const Characteristic&, const Characteristic&) = default;

 private:
  std::uint64_t value_ = 0;
};

}  // namespace torflag
