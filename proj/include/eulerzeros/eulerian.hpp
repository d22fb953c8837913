#pragma once

#include <string_view>

#include "eulerzeros/polynomial.hpp"

namespace eulerzeros {

enum class EulerianKind { TypeA, TypeB };

std::string_view to_string(EulerianKind kind);

/// Eulerian polynomial A_m (descents over permutations of {1..m}, degree
/// m-1) or B_m (type-B analogue, degree m), generated by the derivative
/// recurrences
///   A_m = (1 + (m-1) z) A_{m-1} + z (1-z) A'_{m-1}
///   B_m = (1 + (2m-1) z) B_{m-1} + 2 z (1-z) B'_{m-1}
/// from A_0 = B_0 = 1. Results are memoized process-wide; the cache is safe
/// to use from concurrent workers.
const Polynomial& eulerian(EulerianKind kind, unsigned m);

/// Descent-count generating polynomial obtained by enumerating all m!
/// permutations. Oracle for eulerian(TypeA, m); 1 <= m <= 9.
Polynomial eulerian_a_bruteforce(unsigned m);

/// First m+1 coefficients of (1-z)^{m+1} * sum_{k=0}^{terms} (2k+1)^m z^k.
/// Oracle for eulerian(TypeB, m); requires terms >= m+2.
Polynomial eulerian_b_series_oracle(unsigned m, unsigned terms);

/// Closed form for the coefficient of z: 2^m - m - 1 (type A) or
/// 3^m - (m+1) (type B). Requires m >= 1.
BigInt first_coeff_formula(EulerianKind kind, unsigned m);

}  // namespace eulerzeros
