#include "eulerzeros/rational.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <utility>

namespace eulerzeros {

namespace {

// Parses an optionally signed decimal integer with an optional "^k" power.
BigInt parse_integer_power(std::string_view text, std::string_view whole) {
  auto fail = [&]() -> BigInt {
    throw DomainError("malformed rational '" + std::string(whole) + "'");
  };
  const auto caret = text.find('^');
  auto parse_int = [&](std::string_view s, bool allow_sign) -> BigInt {
    if (s.empty()) return fail();
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return fail();
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) return fail();
    }
    std::string digits(s.substr(i));
    BigInt v(digits, 10);
    return s[0] == '-' ? BigInt(-v) : v;
  };
  if (caret == std::string_view::npos) return parse_int(text, true);
  const BigInt base = parse_int(text.substr(0, caret), true);
  const BigInt exponent = parse_int(text.substr(caret + 1), false);
  if (!exponent.fits_ulong_p() || exponent > 100000) return fail();
  return pow(base, static_cast<unsigned>(exponent.get_ui()));
}

// Parses a plain decimal such as "-1.25e-12" exactly.
Rational parse_decimal(std::string_view text) {
  std::string mantissa(text);
  long exponent = 0;
  const auto e = mantissa.find_first_of("eE");
  if (e != std::string::npos) {
    const std::string exp_part = mantissa.substr(e + 1);
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_part, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != exp_part.size()) {
      throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    mantissa.resize(e);
  }
  const auto dot = mantissa.find('.');
  if (dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  if (std::labs(exponent) > 100000) {
    throw DomainError("exponent out of range in '" + std::string(text) + "'");
  }
  const Rational m = Rational::parse(mantissa);
  const Rational scale = pow(BigInt(10), static_cast<unsigned>(std::labs(exponent)));
  return exponent >= 0 ? m * scale : m / scale;
}

// floor(log10(|v|)) for v != 0, exact.
long decimal_exponent(const mpq_class& v) {
  const mpq_class a = abs(v);
  const double approx = std::log10(std::abs(a.get_d()));
  long e;
  if (std::isfinite(approx)) {
    e = static_cast<long>(std::floor(approx));
  } else {
    long exp_num = 0;
    long exp_den = 0;
    mpz_get_d_2exp(&exp_num, a.get_num_mpz_t());
    mpz_get_d_2exp(&exp_den, a.get_den_mpz_t());
    e = static_cast<long>(
        std::floor(static_cast<double>(exp_num - exp_den) * std::log10(2.0)));
  }
  auto ten_pow = [](long k) {
    mpq_class r(1);
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(k)));
    if (k >= 0) {
      r = p;
    } else {
      r = mpq_class(mpz_class(1), p);
    }
    return r;
  };
  while (ten_pow(e) > a) --e;
  while (ten_pow(e + 1) <= a) ++e;
  return e;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw DomainError("empty rational");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (text.find_first_of(".eE") != std::string_view::npos) {
      return parse_decimal(text);
    }
    return Rational(parse_integer_power(text, text));
  }
  const BigInt num = parse_integer_power(text.substr(0, slash), text);
  const BigInt den = parse_integer_power(text.substr(slash + 1), text);
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1) / value_);
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::string Rational::to_decimal(int digits, bool round_up) const {
  if (digits < 1) throw DomainError("to_decimal needs at least one digit");
  if (is_zero()) return "0";
  const long e = decimal_exponent(value_);
  const long shift = digits - 1 - e;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10,
                static_cast<unsigned long>(std::labs(shift)));
  mpz_class num = value_.get_num();
  mpz_class den = value_.get_den();
  if (shift >= 0) {
    num *= scale;
  } else {
    den *= scale;
  }
  mpz_class m;
  if (round_up) {
    mpz_cdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  const bool negative = m < 0;
  std::string body = mpz_class(::abs(m)).get_str(10);
  // Directed rounding may carry into an extra digit (9.99.. -> 10.0..).
  long exponent = e + static_cast<long>(body.size()) - digits;
  while (body.size() > 1 && body.back() == '0') body.pop_back();
  std::string out = negative ? "-" : "";
  out += body[0];
  if (body.size() > 1) {
    out += '.';
    out.append(body, 1, std::string::npos);
  }
  if (exponent != 0) out += "e" + std::to_string(exponent);
  return out;
}

double Rational::log() const {
  if (sign() <= 0) throw DomainError("log of a non-positive rational");
  long exp_num = 0;
  long exp_den = 0;
  const double mant_num = mpz_get_d_2exp(&exp_num, value_.get_num_mpz_t());
  const double mant_den = mpz_get_d_2exp(&exp_den, value_.get_den_mpz_t());
  return std::log(mant_num) - std::log(mant_den) +
         static_cast<double>(exp_num - exp_den) * std::numbers::ln2;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

Rational pow(const Rational& base, unsigned exponent) {
  return Rational(pow(base.num(), exponent), pow(base.den(), exponent));
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

RationalInterval::RationalInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw DomainError("interval with lo > hi: [" + lo_.to_string() + ", " +
                      hi_.to_string() + "]");
  }
}

}  // namespace eulerzeros
