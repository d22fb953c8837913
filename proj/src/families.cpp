#include "eulerzeros/families.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace eulerzeros {

namespace {

void require_unit_open(const RationalInterval& a, std::string_view op) {
  if (!a.inside_open(0, 1)) {
    throw DomainError(std::string(op) + ": a must lie in (0, 1)");
  }
}

// (c0 + c1 t)^k for k = 0..d.
std::vector<Polynomial> binomial_rows(const Polynomial& base, unsigned d) {
  std::vector<Polynomial> rows;
  rows.reserve(d + 1);
  rows.emplace_back(Polynomial{1});
  for (unsigned k = 1; k <= d; ++k) rows.push_back(rows.back() * base);
  return rows;
}

}  // namespace

Polynomial poly_compose_one_minus(const Polynomial& p) {
  const auto rows = binomial_rows(Polynomial{1, -1}, p.size());
  Polynomial sum;
  const auto c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) sum = sum + poly_scale(rows[k], c[k]);
  }
  return sum;
}

std::string_view to_string(FamilyKind kind) {
  return kind == FamilyKind::XiTilde ? "xi" : "lambda";
}

EulerianKind source_kind(FamilyKind kind) {
  return kind == FamilyKind::XiTilde ? EulerianKind::TypeB
                                     : EulerianKind::TypeA;
}

unsigned source_index(FamilyKind kind, unsigned n) {
  return kind == FamilyKind::XiTilde ? 2 * n - 1 : 2 * n;
}

Rational family_normalization(FamilyKind kind, unsigned n) {
  const Rational sign = (n + 1) % 2 == 0 ? 1 : -1;
  BigInt denom;
  if (kind == FamilyKind::XiTilde) {
    denom = pow(BigInt(2), 4 * n - 1) * factorial(2 * n - 1);
  } else {
    denom = (pow(BigInt(2), 2 * n + 1) - 1) * factorial(2 * n);
  }
  return sign / Rational(denom);
}

Polynomial mobius_numerator(const Polynomial& p, unsigned d) {
  if (p.is_zero()) return {};
  if (*p.degree() > d) {
    throw DomainError("mobius_numerator: d = " + std::to_string(d) +
                      " is below degree " + std::to_string(*p.degree()));
  }
  // -(1 - t) = t - 1
  const auto neg_one_minus_t = binomial_rows(Polynomial{-1, 1}, d);
  const auto one_plus_t = binomial_rows(Polynomial{1, 1}, d);
  Polynomial sum;
  const auto c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    sum = sum + poly_scale(neg_one_minus_t[k] * one_plus_t[d - k], c[k]);
  }
  return sum;
}

FamilyPolynomial build_family(FamilyKind kind, unsigned n) {
  if (n < 2) throw DomainError("build_family: n must be >= 2");
  return family_from_source(
      kind, n, eulerian(source_kind(kind), source_index(kind, n)));
}

FamilyPolynomial family_from_source(FamilyKind kind, unsigned n,
                                    const Polynomial& source) {
  if (n < 2) throw DomainError("family_from_source: n must be >= 2");
  const unsigned m = source_index(kind, n);
  const Polynomial q = mobius_numerator(source, 2 * n - 1);
  if (!q.coeff(0).is_zero()) {
    throw CertificationError("build_family: Mobius numerator of " +
                             std::string(to_string(source_kind(kind))) + "_" +
                             std::to_string(m) + " has nonzero constant term");
  }
  const Polynomial r = poly_divexact_monomial(q);
  std::vector<Rational> even;
  const auto c = r.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % 2 == 1) {
      if (!c[k].is_zero()) {
        throw CertificationError("build_family: odd coefficient t^" +
                                 std::to_string(k) + " is nonzero");
      }
      continue;
    }
    even.push_back(c[k]);
  }
  const Rational norm = family_normalization(kind, n);
  Polynomial poly = poly_scale(Polynomial(std::move(even)), norm);
  if (poly.degree() != std::optional<std::size_t>(n - 1)) {
    throw CertificationError("build_family: degree is not n-1");
  }
  return {kind, n, std::move(poly), norm};
}

Rational x_from_a(const Rational& a) {
  require_unit_open(RationalInterval::point(a), "x_from_a");
  const Rational s = (Rational(1) - a) / (Rational(1) + a);
  return s * s;
}

RationalInterval x_from_a_interval(const RationalInterval& a) {
  require_unit_open(a, "x_from_a_interval");
  return {x_from_a(a.hi()), x_from_a(a.lo())};
}

Rational gap_from_a(const Rational& a) {
  require_unit_open(RationalInterval::point(a), "gap_from_a");
  const Rational s = Rational(1) + a;
  return Rational(4) * a / (s * s);
}

RationalInterval gap_from_a(const RationalInterval& a) {
  require_unit_open(a, "gap_from_a");
  return {gap_from_a(a.lo()), gap_from_a(a.hi())};
}

std::vector<IsolatedRoot> family_zeros(const FamilyPolynomial& fp,
                                       const Rational& rel_width) {
  const Polynomial prim = fp.primitive();
  const SturmChain chain(prim);
  const RationalInterval window = nudge_off_roots(chain, {0, 1});
  auto roots = isolate_roots(chain, window);
  for (auto& r : roots) r = refine(r, prim, rel_width);
  return roots;
}

std::vector<IsolatedRoot> family_zeros_two_sided(const FamilyPolynomial& fp,
                                                 const Rational& rel_width) {
  const Polynomial prim = fp.primitive();
  auto roots = family_zeros(fp, rel_width);
  const Polynomial reflected = poly_compose_one_minus(prim);
  const Rational half(BigInt(1), BigInt(2));
  for (auto& r : roots) {
    if (r.interval.lo() < half || r.interval.is_point()) continue;
    const IsolatedRoot y{
        {Rational(1) - r.interval.hi(), Rational(1) - r.interval.lo()},
        fingerprint(reflected)};
    const IsolatedRoot fine = refine(y, reflected, rel_width);
    r.interval = {Rational(1) - fine.interval.hi(),
                  Rational(1) - fine.interval.lo()};
  }
  return roots;
}

std::vector<RationalInterval> family_zeros_via_eulerian(
    FamilyKind kind, unsigned n, const Rational& rel_width) {
  if (n < 2) throw DomainError("family_zeros_via_eulerian: n must be >= 2");
  const Polynomial& source =
      eulerian(source_kind(kind), source_index(kind, n));
  const SturmChain chain(source);
  const RationalInterval window = nudge_off_roots(chain, {-1, 0});
  std::vector<RationalInterval> out;
  for (const auto& r : isolate_roots(chain, window)) {
    const IsolatedRoot fine = refine(r, source, rel_width);
    const RationalInterval a(-fine.interval.hi(), -fine.interval.lo());
    out.push_back(x_from_a_interval(a));
  }
  // Ascending z is descending a, hence ascending x.
  return out;
}

}  // namespace eulerzeros
