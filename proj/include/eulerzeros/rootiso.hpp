#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eulerzeros/polynomial.hpp"

namespace eulerzeros {

// The Sturm chain ended in a non-constant polynomial.
class NotSquarefreeError : public Error {
 public:
  using Error::Error;
};

// A root-counting query hit an exact root at an interval endpoint. Callers
// nudge the endpoint (see nudge_off_roots) and retry.
class EndpointIsRootError : public Error {
 public:
  using Error::Error;
};

// Identifies the polynomial an isolation belongs to, up to a positive or
// negative rational multiple.
using Fingerprint = std::uint64_t;

Fingerprint fingerprint(const Polynomial& p);

// Exact sign of p at t (-1, 0, +1).
int sign_at(const Polynomial& p, const Rational& t);

/// Sturm sequence p, p', -prem(p, p'), ... with every member divided by its
/// positive integer content. Construction fails with NotSquarefreeError
/// unless the last member is a constant.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p);

  std::span<const Polynomial> members() const { return members_; }
  const Polynomial& source() const { return members_.front(); }
  Fingerprint source_fingerprint() const { return fingerprint_; }

  int source_sign(const Rational& t) const;
  std::size_t sign_variations(const Rational& t) const;

 private:
  std::vector<Polynomial> members_;
  std::vector<std::vector<BigInt>> integer_members_;
  Fingerprint fingerprint_ = 0;
};

SturmChain sturm_chain(const Polynomial& p);

// Number of distinct roots in (lo, hi]. Throws EndpointIsRootError when
// either endpoint is an exact root.
std::size_t count_roots(const SturmChain& chain, const RationalInterval& iv);

struct IsolatedRoot {
  RationalInterval interval;
  Fingerprint source = 0;
};

// Ascending, disjoint isolating intervals covering every root of p in iv.
// Endpoints of iv must not be roots.
std::vector<IsolatedRoot> isolate_roots(const Polynomial& p,
                                        const RationalInterval& iv);
std::vector<IsolatedRoot> isolate_roots(const SturmChain& chain,
                                        const RationalInterval& iv);

// Shrinks [lo, hi] at any endpoint that is a root of p, by exact nudges of
// the form width/(2(1 + sum |c_i|)), halving until the root count is stable
// between successive nudges.
RationalInterval nudge_off_roots(const SturmChain& chain,
                                 const RationalInterval& iv);

// Bisects until (hi - lo) <= rel_width * max(|lo|, |hi|). A midpoint that is
// an exact root collapses the interval to that point.
IsolatedRoot refine(const IsolatedRoot& root, const Polynomial& p,
                    const Rational& rel_width);

/// Root of p in (-1, 0) closest to the origin, refined to rel_width.
///
/// With p normalized to p(0) = 1 and c1 its coefficient of z, a polynomial
/// with positive coefficients and only real negative zeros has its
/// smallest-magnitude zero at distance at least 1/c1 from 0, so the window
/// (-1, -1/(2 c1)] holds it. A root at -1 is divided out before counting.
IsolatedRoot smallest_magnitude_negative_root(const Polynomial& p,
                                              const Rational& rel_width);

}  // namespace eulerzeros
