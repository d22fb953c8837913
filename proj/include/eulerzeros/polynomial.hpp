#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eulerzeros/rational.hpp"

namespace eulerzeros {

// The constant term of a polynomial was nonzero where exact division by the
// indeterminate was requested.
class NotDivisibleError : public Error {
 public:
  using Error::Error;
};

/// Dense univariate polynomial over the rationals. Coefficient k multiplies
/// the k-th power of the indeterminate. Trailing zeros are never stored, so
/// the zero polynomial is the empty sequence.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  // c * z^k
  static Polynomial monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  // nullopt is the degree of the zero polynomial (minus infinity).
  std::optional<std::size_t> degree() const;
  std::size_t size() const { return coeffs_.size(); }

  // Coefficient of z^k; zero past the end.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  // "1 + 4*z + z^2" style rendering, for diagnostics.
  std::string to_string(std::string_view var = "z") const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_sub(const Polynomial& p, const Polynomial& q);
Polynomial poly_neg(const Polynomial& p);
Polynomial poly_scale(const Polynomial& p, const Rational& c);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

// Horner evaluation.
Rational poly_eval(const Polynomial& p, const Rational& t);

Polynomial poly_derivative(const Polynomial& p);

// p(z) / z. Throws NotDivisibleError if p(0) != 0.
Polynomial poly_divexact_monomial(const Polynomial& p);

// p(z) * z
Polynomial poly_shift_up(const Polynomial& p);

// p divided by its signed content: coprime integer coefficients and a
// positive leading coefficient. Throws DomainError for the zero polynomial.
Polynomial poly_content_primitive(const Polynomial& p);

// Integer coefficient vector of poly_content_primitive(p).
std::vector<BigInt> primitive_integer_coefficients(const Polynomial& p);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  return poly_add(p, q);
}
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  return poly_sub(p, q);
}
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  return poly_mul(p, q);
}

}  // namespace eulerzeros
