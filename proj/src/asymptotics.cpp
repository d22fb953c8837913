#include "eulerzeros/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "eulerzeros/parallel.hpp"

namespace eulerzeros {

namespace {

// Fixed slack for the floating-point logarithm evaluations.
constexpr double kLogSlack = 1e-9;
// Rate precision contract: log(gap_hi/gap_lo) <= kRatePrecision * (n - 1).
constexpr double kRatePrecision = 1e-6;

const Rational& zero_rel_width() {
  static const Rational w(BigInt(1), pow(BigInt(10), 8));
  return w;
}

void require_n(unsigned n, std::string_view op) {
  if (n < 2) throw DomainError(std::string(op) + ": n must be >= 2");
}

double cdf_from_log_ratio(double log_ratio) {
  return 2.0 / std::numbers::pi *
         std::atan(log_ratio / std::numbers::pi);
}

}  // namespace

Rational default_rel_width() { return {BigInt(1), pow(BigInt(10), 12)}; }

RationalInterval extreme_a(FamilyKind kind, unsigned n,
                           const Rational& rel_width) {
  require_n(n, "extreme_a");
  const Polynomial& source =
      eulerian(source_kind(kind), source_index(kind, n));
  const IsolatedRoot root = smallest_magnitude_negative_root(source, rel_width);
  return {-root.interval.hi(), -root.interval.lo()};
}

RationalInterval direct_extreme_gap(FamilyKind kind, unsigned n,
                                    const Rational& rel_width) {
  require_n(n, "direct_extreme_gap");
  const auto zeros = family_zeros(build_family(kind, n), rel_width);
  if (zeros.size() != n - 1) {
    throw CertificationError("direct route found " +
                             std::to_string(zeros.size()) + " zeros, expected " +
                             std::to_string(n - 1));
  }
  const RationalInterval& top = zeros.back().interval;
  return {Rational(1) - top.hi(), Rational(1) - top.lo()};
}

// (a enclosure, gap enclosure), cross-checked against the direct route for
// small n.
static std::pair<RationalInterval, RationalInterval> checked_extreme(
    FamilyKind kind, unsigned n, const Rational& rel_width) {
  RationalInterval a = extreme_a(kind, n, rel_width);
  RationalInterval gap = gap_from_a(a);
  if (n <= kTwoRouteMaxN) {
    const RationalInterval direct = direct_extreme_gap(kind, n, rel_width);
    if (!gap.intersects(direct)) {
      throw CertificationError(
          "two-route disagreement for " + std::string(to_string(kind)) +
          " n=" + std::to_string(n) + ": Eulerian route [" +
          gap.lo().to_string() + ", " + gap.hi().to_string() +
          "] vs direct [" + direct.lo().to_string() + ", " +
          direct.hi().to_string() + "]");
    }
  }
  return {std::move(a), std::move(gap)};
}

RationalInterval extreme_gap(FamilyKind kind, unsigned n,
                             const Rational& rel_width) {
  return checked_extreme(kind, n, rel_width).second;
}

RateRecord rate(FamilyKind kind, unsigned n, const Rational& rel_width) {
  require_n(n, "rate");
  auto [a, gap] = checked_extreme(kind, n, rel_width);
  const double spread = (gap.hi() / gap.lo()).log();
  if (spread > kRatePrecision * (n - 1)) {
    throw DomainError("rate: rel_width " + rel_width.to_string() +
                      " too coarse for n=" + std::to_string(n) +
                      "; tighten it so log(hi/lo) <= 1e-6 (n-1)");
  }
  const double denom = n - 1;
  const double lo = gap.lo().log() / denom;
  const double hi = gap.hi().log() / denom;
  return {kind,
          n,
          std::move(a),
          std::move(gap),
          0.5 * (lo + hi),
          0.5 * (hi - lo) + kLogSlack};
}

RationalInterval a_enclosure_deciding(const Polynomial& source,
                                      const Rational& lower,
                                      const Rational& upper,
                                      const Rational& rel_width) {
  IsolatedRoot root = smallest_magnitude_negative_root(source, rel_width);
  Rational width = rel_width;
  const Rational step(BigInt(1), pow(BigInt(10), 6));
  const Rational floor_width(BigInt(1), pow(BigInt(10), 300));
  for (;;) {
    RationalInterval a(-root.interval.hi(), -root.interval.lo());
    const Rational* inside = nullptr;
    for (const Rational* b : {&lower, &upper}) {
      if (a.lo() < *b && *b < a.hi()) inside = b;
    }
    if (inside == nullptr) return a;
    // The isolating interval holds exactly one zero; a bound strictly inside
    // it is either that zero or lies to one side after refinement.
    if (poly_eval(source, -*inside).is_zero()) {
      return RationalInterval::point(*inside);
    }
    width *= step;
    if (width < floor_width) {
      throw CertificationError("a_enclosure_deciding: bound " +
                               inside->to_string() + " not separated");
    }
    root = refine(root, source, width);
  }
}

LemmaVerdict lemma_bounds_check(FamilyKind kind, unsigned n,
                                const Rational& rel_width) {
  require_n(n, "lemma_bounds_check");
  const unsigned m = source_index(kind, n);
  const Polynomial& source = eulerian(source_kind(kind), m);
  const BigInt formula = first_coeff_formula(source_kind(kind), m);
  if (source.coeff(0) != Rational(1) || source.coeff(1) != Rational(formula)) {
    throw CertificationError(
        "first coefficient of " + std::string(to_string(source_kind(kind))) +
        "_" + std::to_string(m) + " is " + source.coeff(1).to_string() +
        ", formula gives " + formula.get_str());
  }
  const unsigned degree = 2 * n - 1;
  if (source.degree() != std::optional<std::size_t>(degree)) {
    throw CertificationError("unexpected Eulerian degree");
  }
  const Rational lower = Rational(formula).inverse();
  const Rational upper = Rational(degree) * lower;
  RationalInterval a = a_enclosure_deciding(source, lower, upper, rel_width);
  const bool holds = lower <= a.lo() && a.hi() <= upper;
  return {kind, n, formula, degree, lower, std::move(a), upper, holds};
}

double limiting_cdf(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("limiting_cdf: x must lie in (0, 1)");
  }
  const double s = std::sqrt(x);
  return cdf_from_log_ratio(std::log1p(s) - std::log1p(-s));
}

double limiting_cdf(const Rational& x) {
  if (!(x.sign() > 0 && x < Rational(1))) {
    throw DomainError("limiting_cdf: x must lie in (0, 1)");
  }
  // (1+s)/(1-s) = (1+s)^2 / (1-x)
  const double s = std::sqrt(x.to_double());
  const Rational gap = Rational(1) - x;
  return cdf_from_log_ratio(2.0 * std::log1p(s) - gap.log());
}

DistReport empirical_distance(FamilyKind kind, unsigned n) {
  require_n(n, "empirical_distance");
  const auto zeros =
      family_zeros_two_sided(build_family(kind, n), zero_rel_width());
  if (zeros.size() != n - 1) {
    throw CertificationError("empirical_distance: wrong zero count");
  }
  const double total = n - 1;
  double sup = 0.0;
  for (std::size_t k = 1; k <= zeros.size(); ++k) {
    const double f = limiting_cdf(zeros[k - 1].interval.midpoint());
    sup = std::max({sup, std::abs(f - k / total),
                    std::abs(f - (k - 1) / total)});
  }
  return {kind, n, sup};
}

LeftEdgeReport left_edge_ratio(FamilyKind kind, unsigned n, unsigned k) {
  require_n(n, "left_edge_ratio");
  if (k < 1 || k > n - 1) {
    throw DomainError("left_edge_ratio: k must be in 1..n-1, got " +
                      std::to_string(k));
  }
  const auto zeros = family_zeros(build_family(kind, n), zero_rel_width());
  if (zeros.size() != n - 1) {
    throw CertificationError("left_edge_ratio: wrong zero count");
  }
  const RationalInterval& zero = zeros[k - 1].interval;
  const double scale = static_cast<double>(n - 1) * (n - 1) / (double(k) * k);
  return {kind, n, k, zero, zero.midpoint().to_double() * scale};
}

double left_edge_constant() {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return pi2 * pi2 / 16.0;
}

std::vector<RateRecord> rate_table(std::span<const unsigned> n_values,
                                   const Rational& rel_width, unsigned jobs) {
  struct Job {
    unsigned n;
    FamilyKind kind;
  };
  std::vector<Job> todo;
  for (unsigned n : n_values) {
    require_n(n, "rate_table");
    todo.push_back({n, FamilyKind::XiTilde});
    todo.push_back({n, FamilyKind::LambdaTilde});
  }
  auto rows = parallel_map(todo.size(), jobs, [&](std::size_t i) {
    return rate(todo[i].kind, todo[i].n, rel_width);
  });
  std::stable_sort(rows.begin(), rows.end(),
                   [](const RateRecord& a, const RateRecord& b) {
                     if (a.n != b.n) return a.n < b.n;
                     return a.kind < b.kind;
                   });
  return rows;
}

}  // namespace eulerzeros
