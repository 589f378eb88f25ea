#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace ssr {

using BigInt = boost::multiprecision::cpp_int;

/// Integer-coefficient polynomial in beta, ascending order:
/// coeffs[k] multiplies beta^k.
struct BetaPolynomial {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Iterating the stationarity recurrence symbolically from |c_{-1}|^2 = 0,
/// |c'_0|^2 = 1 expresses every coefficient as |c_n|^2 = P_n(beta) |c_0|^2
/// with P_n an integer polynomial of degree n. At the solution beta,
/// P_M(beta) = 1 and sum_n P_n(beta) = 1/|c_0|^2.
struct PolynomialTable {
    int total = 0;                      ///< M
    std::vector<BetaPolynomial> polys;  ///< P_0 .. P_M
};

/// Build P_0..P_M by exact integer arithmetic:
/// P_{n+1} = P_n ((beta-1) P_n - P_{n-1}) / (P_n + P_{n-1}), an exact division.
PolynomialTable polynomial_table(int total);

/// Exact rational Horner evaluation, rounded once at the end. The expanded
/// coefficients alternate in sign and exceed 1e25 by degree 64, so any
/// fixed-precision Horner loses the O(1) result to cancellation (double
/// precision fails before M = 20, 50-digit floats by M = 64).
double evaluate(const BetaPolynomial& poly, double beta);

}  // namespace ssr
