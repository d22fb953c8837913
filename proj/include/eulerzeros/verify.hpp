#pragma once

#include <string>
#include <vector>

#include "eulerzeros/families.hpp"

namespace eulerzeros {

struct CheckResult {
  std::string check;
  FamilyKind kind;
  unsigned n;
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  Rational rel_width;
  // Test hook: perturb the linear coefficient of the source Eulerian
  // polynomial before any check runs.
  bool inject_fault = false;
};

/// Runs every structural and lemma-level check for one (kind, n):
/// first_coeff, palindromy, positivity, mass, vanishing, divisibility,
/// evenness, degree, zero_count, lemma_sandwich, and two_route for
/// n <= kTwoRouteMaxN. A check that throws is reported as failed with the
/// error text as detail.
std::vector<CheckResult> verify_family(FamilyKind kind, unsigned n,
                                       const VerifyOptions& options);

}  // namespace eulerzeros
