#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerzeros {

using BigInt = mpz_class;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An internal identity that must hold exactly did not (generation bug,
// failed certificate). The CLI maps this to exit status 3.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<std::conditional_t<std::is_signed_v<T>, long,
                                               unsigned long>>(v)) {}
  Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p", "p/q", with optional integer powers in either part
  /// ("1/10^12", "-3^4/2"). Throws DomainError on malformed input or q = 0.
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;

  // "p/q", or "p" for integers.
  std::string to_string() const;

  // Decimal rendering with at most `digits` significant digits, rounded
  // toward -inf (round_up = false) or +inf (round_up = true).
  std::string to_decimal(int digits, bool round_up) const;

  // Nearest double; may under/overflow for extreme magnitudes.
  double to_double() const { return value_.get_d(); }

  // Natural log of a positive rational, computed as log(num) - log(den)
  // so that magnitudes far outside double range stay finite.
  double log() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

Rational pow(const Rational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);
BigInt factorial(unsigned n);

/// Closed interval [lo, hi] with exact rational endpoints.
class RationalInterval {
 public:
  RationalInterval(Rational lo, Rational hi);
  static RationalInterval point(const Rational& v) { return {v, v}; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool intersects(const RationalInterval& o) const {
    return lo_ <= o.hi_ && o.lo_ <= hi_;
  }
  // Open-interval containment: lo < v < hi for all v in *this.
  bool inside_open(const Rational& a, const Rational& b) const {
    return a < lo_ && hi_ < b;
  }

  friend bool operator==(const RationalInterval&,
                         const RationalInterval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

}  // namespace eulerzeros
