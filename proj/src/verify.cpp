#include "eulerzeros/verify.hpp"

#include <functional>
#include <utility>

#include "eulerzeros/asymptotics.hpp"

namespace eulerzeros {

namespace {

using Check = std::function<std::pair<bool, std::string>()>;

CheckResult run_check(std::string name, FamilyKind kind, unsigned n,
                      const Check& body) {
  try {
    auto [ok, detail] = body();
    return {std::move(name), kind, n, ok, std::move(detail)};
  } catch (const std::exception& e) {
    return {std::move(name), kind, n, false, e.what()};
  }
}

std::string show(const RationalInterval& iv) {
  return "[" + iv.lo().to_string() + ", " + iv.hi().to_string() + "]";
}

}  // namespace

std::vector<CheckResult> verify_family(FamilyKind kind, unsigned n,
                                       const VerifyOptions& options) {
  if (n < 2) throw DomainError("verify_family: n must be >= 2");
  const EulerianKind ekind = source_kind(kind);
  const unsigned m = source_index(kind, n);
  Polynomial source = eulerian(ekind, m);
  if (options.inject_fault) {
    std::vector<Rational> c(source.coefficients().begin(),
                            source.coefficients().end());
    c[1] += 1;
    source = Polynomial(std::move(c));
  }
  const std::string label = std::string(to_string(ekind)) + "_" +
                            std::to_string(m);
  const auto coeffs = source.coefficients();

  std::vector<CheckResult> out;
  auto add = [&](std::string name, const Check& body) {
    out.push_back(run_check(std::move(name), kind, n, body));
  };

  add("first_coeff", [&] {
    const BigInt formula = first_coeff_formula(ekind, m);
    const bool ok = source.coeff(1) == Rational(formula);
    return std::pair{ok, "[z]" + label + " = " + source.coeff(1).to_string() +
                             ", formula " + formula.get_str()};
  });

  add("palindromy", [&] {
    const std::size_t d = coeffs.size() - 1;
    for (std::size_t k = 0; k <= d; ++k) {
      if (coeffs[k] != coeffs[d - k]) {
        return std::pair{false, label + " coefficient " + std::to_string(k) +
                                    " != coefficient " +
                                    std::to_string(d - k)};
      }
    }
    return std::pair{true, label + " is palindromic"};
  });

  add("positivity", [&] {
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].sign() <= 0 || !coeffs[k].is_integer()) {
        return std::pair{false, label + " coefficient " + std::to_string(k) +
                                    " is not a positive integer"};
      }
    }
    return std::pair{true, label + " has positive integer coefficients"};
  });

  add("mass", [&] {
    BigInt expected = factorial(m);
    if (ekind == EulerianKind::TypeB) expected *= pow(BigInt(2), m);
    const Rational value = poly_eval(source, 1);
    return std::pair{value == Rational(expected),
                     label + "(1) = " + value.to_string() + ", expected " +
                         expected.get_str()};
  });

  add("vanishing", [&] {
    const Rational value = poly_eval(source, -1);
    return std::pair{value.is_zero(), label + "(-1) = " + value.to_string()};
  });

  const Polynomial numerator = mobius_numerator(source, 2 * n - 1);

  add("divisibility", [&] {
    const Rational c0 = numerator.coeff(0);
    return std::pair{c0.is_zero(),
                     "constant term of Mobius numerator = " + c0.to_string()};
  });

  add("evenness", [&] {
    const Polynomial r = poly_divexact_monomial(numerator);
    for (std::size_t k = 1; k < r.size(); k += 2) {
      if (!r.coeff(k).is_zero()) {
        return std::pair{false, "t^" + std::to_string(k) + " coefficient = " +
                                    r.coeff(k).to_string()};
      }
    }
    return std::pair{true, std::string("all odd coefficients vanish")};
  });

  add("degree", [&] {
    const FamilyPolynomial fp = family_from_source(kind, n, source);
    return std::pair{fp.poly.degree() == std::optional<std::size_t>(n - 1),
                     "degree " + std::to_string(*fp.poly.degree())};
  });

  add("zero_count", [&] {
    const FamilyPolynomial fp = family_from_source(kind, n, source);
    const SturmChain chain(fp.primitive());
    const std::size_t count =
        count_roots(chain, nudge_off_roots(chain, {0, 1}));
    return std::pair{count == n - 1, std::to_string(count) +
                                         " simple zeros in (0, 1), expected " +
                                         std::to_string(n - 1)};
  });

  add("lemma_sandwich", [&] {
    const BigInt formula = first_coeff_formula(ekind, m);
    if (source.coeff(1) / source.coeff(0) != Rational(formula)) {
      return std::pair{false, "c1 from " + label +
                                  " disagrees with the closed form"};
    }
    const unsigned d = 2 * n - 1;
    const Rational lower = Rational(formula).inverse();
    const Rational upper = Rational(d) * lower;
    const RationalInterval a =
        a_enclosure_deciding(source, lower, upper, options.rel_width);
    const bool ok = lower <= a.lo() && a.hi() <= upper;
    return std::pair{ok, lower.to_string() + " <= a <= " + upper.to_string() +
                             ", a in " + show(a)};
  });

  if (n <= kTwoRouteMaxN) {
    add("two_route", [&] {
      const IsolatedRoot root =
          smallest_magnitude_negative_root(source, options.rel_width);
      const RationalInterval gap =
          gap_from_a(RationalInterval(-root.interval.hi(), -root.interval.lo()));
      const FamilyPolynomial fp = family_from_source(kind, n, source);
      const auto zeros = family_zeros(fp, options.rel_width);
      if (zeros.size() != n - 1) {
        return std::pair{false, "direct route found " +
                                    std::to_string(zeros.size()) + " zeros"};
      }
      const RationalInterval& top = zeros.back().interval;
      const RationalInterval direct(Rational(1) - top.hi(),
                                    Rational(1) - top.lo());
      return std::pair{gap.intersects(direct),
                       "Eulerian route " + gap.lo().to_decimal(12, false) +
                           ".." + gap.hi().to_decimal(12, true) +
                           ", direct " + direct.lo().to_decimal(12, false) +
                           ".." + direct.hi().to_decimal(12, true)};
    });
  }
  return out;
}

}  // namespace eulerzeros
