#pragma once

#include <string_view>
#include <vector>

#include "eulerzeros/eulerian.hpp"
#include "eulerzeros/polynomial.hpp"
#include "eulerzeros/rootiso.hpp"

namespace eulerzeros {

// XiTilde is built from B_{2n-1}, LambdaTilde from A_{2n}.
enum class FamilyKind { XiTilde, LambdaTilde };

std::string_view to_string(FamilyKind kind);  // "xi" / "lambda"
EulerianKind source_kind(FamilyKind kind);
unsigned source_index(FamilyKind kind, unsigned n);  // 2n-1 or 2n

/// A rescaled family member in the variable x = t^2, of degree n-1, with
/// its signed prefactor already multiplied in.
struct FamilyPolynomial {
  FamilyKind kind;
  unsigned n;
  Polynomial poly;
  Rational normalization;

  // Same zeros, coprime integer coefficients.
  Polynomial primitive() const { return poly_content_primitive(poly); }
};

// (-1)^{n+1} / (2^{4n-1} (2n-1)!) for XiTilde,
// (-1)^{n+1} / ((2^{2n+1} - 1) (2n)!) for LambdaTilde.
Rational family_normalization(FamilyKind kind, unsigned n);

/// (1+t)^d p(-(1-t)/(1+t)) expanded as sum_k p_k (-(1-t))^k (1+t)^{d-k}.
/// Throws DomainError when d < degree(p).
Polynomial mobius_numerator(const Polynomial& p, unsigned d);

/// Applies the Mobius substitution to the source Eulerian polynomial,
/// divides by t, drops to even powers and reindexes t^2 -> x. Any failed
/// exactness check (nonzero constant term, odd coefficient) raises
/// CertificationError. Requires n >= 2.
FamilyPolynomial build_family(FamilyKind kind, unsigned n);

// build_family with an explicitly supplied source polynomial in place of
// the generated Eulerian one.
FamilyPolynomial family_from_source(FamilyKind kind, unsigned n,
                                    const Polynomial& source);

// x = ((1-a)/(1+a))^2 on 0 < a < 1.
Rational x_from_a(const Rational& a);
RationalInterval x_from_a_interval(const RationalInterval& a);

// 1 - x = 4a/(1+a)^2, increasing on (0, 1).
Rational gap_from_a(const Rational& a);
RationalInterval gap_from_a(const RationalInterval& a);

// All n-1 zeros of the family polynomial in (0, 1), ascending, refined to
// rel_width.
std::vector<IsolatedRoot> family_zeros(const FamilyPolynomial& fp,
                                       const Rational& rel_width);

// Like family_zeros, but zeros in [1/2, 1) are refined until 1 - x is known
// to rel_width, which is what any function of log(1 - x) needs.
std::vector<IsolatedRoot> family_zeros_two_sided(const FamilyPolynomial& fp,
                                                 const Rational& rel_width);

// p(1 - x)
Polynomial poly_compose_one_minus(const Polynomial& p);

// The same zeros computed from the source Eulerian polynomial's zeros in
// (-1, 0) and mapped through x_from_a_interval; ascending in x.
std::vector<RationalInterval> family_zeros_via_eulerian(
    FamilyKind kind, unsigned n, const Rational& rel_width);

}  // namespace eulerzeros
