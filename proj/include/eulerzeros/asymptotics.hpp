#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eulerzeros/families.hpp"

namespace eulerzeros {

// 10^-12, the working precision for table work.
Rational default_rel_width();

// Largest n for which extreme_gap also runs the direct-route cross-check.
inline constexpr unsigned kTwoRouteMaxN = 8;

/// One row of the right-edge rate table.
struct RateRecord {
  FamilyKind kind;
  unsigned n;
  RationalInterval a_enclosure;    // smallest-magnitude Eulerian zero, as -a
  RationalInterval gap_enclosure;  // 1 - largest family zero
  double rate;                     // log(gap) / (n - 1)
  double rate_error;               // absolute bound on |rate - true rate|
};

struct DistReport {
  FamilyKind kind;
  unsigned n;
  double sup_distance;
};

struct LeftEdgeReport {
  FamilyKind kind;
  unsigned n;
  unsigned k;
  RationalInterval zero;  // x_{k,n}
  double ratio;           // x_{k,n} (n-1)^2 / k^2
};

struct LemmaVerdict {
  FamilyKind kind;
  unsigned n;
  BigInt c1;
  unsigned degree;
  Rational lower;  // 1/c1
  RationalInterval a_enclosure;
  Rational upper;  // degree/c1
  bool holds;
};

// Enclosure of a, where -a is the zero of the source Eulerian polynomial
// (B_{2n-1} or A_{2n}) closest to the origin.
RationalInterval extreme_a(FamilyKind kind, unsigned n,
                           const Rational& rel_width);

// 1 - largest zero of the family polynomial, isolated directly in x.
RationalInterval direct_extreme_gap(FamilyKind kind, unsigned n,
                                    const Rational& rel_width);

/// Right-edge gap via the Eulerian zero and a -> 4a/(1+a)^2. For
/// n <= kTwoRouteMaxN the direct route must produce an intersecting
/// enclosure, else CertificationError.
RationalInterval extreme_gap(FamilyKind kind, unsigned n,
                             const Rational& rel_width);

/// Normalized log gap. Requires log(gap_hi/gap_lo) <= 1e-6 (n-1); throws
/// DomainError asking for a tighter rel_width otherwise.
RateRecord rate(FamilyKind kind, unsigned n, const Rational& rel_width);

// Enclosure of a (-a the zero of `source` nearest the origin), starting at
// rel_width and refined until neither `lower` nor `upper` lies strictly
// inside it, so comparisons against both are decided exactly.
RationalInterval a_enclosure_deciding(const Polynomial& source,
                                      const Rational& lower,
                                      const Rational& upper,
                                      const Rational& rel_width);

LemmaVerdict lemma_bounds_check(FamilyKind kind, unsigned n,
                                const Rational& rel_width = default_rel_width());

// F(x) = (2/pi) atan((1/pi) log((1 + sqrt x)/(1 - sqrt x))) on (0, 1).
double limiting_cdf(double x);
// Same, with 1 - x formed exactly so zeros within 1e-16 of 1 stay finite.
double limiting_cdf(const Rational& x);

DistReport empirical_distance(FamilyKind kind, unsigned n);

// k counts from 1 (smallest zero).
LeftEdgeReport left_edge_ratio(FamilyKind kind, unsigned n, unsigned k);

// pi^4 / 16
double left_edge_constant();

// Both kinds for each n, sorted by (n, kind) whatever the worker count.
std::vector<RateRecord> rate_table(std::span<const unsigned> n_values,
                                   const Rational& rel_width,
                                   unsigned jobs = 1);

}  // namespace eulerzeros
