#include "eulerzeros/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace eulerzeros {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational();
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of zero");
  return coeffs_.back();
}

std::string Polynomial::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (!first) out += c.sign() < 0 ? " - " : " + ";
    const Rational mag = first ? c : c.abs();
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag == Rational(-1)) {
      out += "-";
    } else if (mag != Rational(1)) {
      out += mag.to_string() + "*";
    }
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
  const auto a = p.coefficients();
  const auto b = q.coefficients();
  std::vector<Rational> out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < a.size()) out[k] += a[k];
    if (k < b.size()) out[k] += b[k];
  }
  return Polynomial(std::move(out));
}

Polynomial poly_neg(const Polynomial& p) {
  std::vector<Rational> out(p.coefficients().begin(), p.coefficients().end());
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial poly_sub(const Polynomial& p, const Polynomial& q) {
  return poly_add(p, poly_neg(q));
}

Polynomial poly_scale(const Polynomial& p, const Rational& c) {
  std::vector<Rational> out(p.coefficients().begin(), p.coefficients().end());
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto a = p.coefficients();
  const auto b = q.coefficients();
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return Polynomial(std::move(out));
}

Rational poly_eval(const Polynomial& p, const Rational& t) {
  const auto c = p.coefficients();
  Rational acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Polynomial poly_derivative(const Polynomial& p) {
  const auto c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * Rational(k);
  return Polynomial(std::move(out));
}

Polynomial poly_divexact_monomial(const Polynomial& p) {
  if (p.is_zero()) return {};
  const auto c = p.coefficients();
  if (!c[0].is_zero()) {
    throw NotDivisibleError("not divisible by the indeterminate: constant term " +
                            c[0].to_string());
  }
  return Polynomial(std::vector<Rational>(c.begin() + 1, c.end()));
}

Polynomial poly_shift_up(const Polynomial& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> out;
  out.reserve(p.size() + 1);
  out.emplace_back();
  out.insert(out.end(), p.coefficients().begin(), p.coefficients().end());
  return Polynomial(std::move(out));
}

std::vector<BigInt> primitive_integer_coefficients(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("content of the zero polynomial");
  const auto c = p.coefficients();
  BigInt lcm_den = 1;
  for (const auto& x : c) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.raw().get_den_mpz_t());
  }
  std::vector<BigInt> ints;
  ints.reserve(c.size());
  BigInt g = 0;
  for (const auto& x : c) {
    BigInt v = x.raw().get_num() * (lcm_den / x.raw().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) g = -g;
  for (auto& v : ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return ints;
}

Polynomial poly_content_primitive(const Polynomial& p) {
  auto ints = primitive_integer_coefficients(p);
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(v);
  return Polynomial(std::move(out));
}

}  // namespace eulerzeros
