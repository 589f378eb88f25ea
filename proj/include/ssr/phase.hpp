#pragma once

#include "ssr/fock.hpp"

#include <complex>
#include <vector>

namespace ssr {

/// Pegg-Barnett probability density of the phase difference between the two
/// modes, sampled on a uniform grid over [0, 2pi).
struct PhaseDensity {
    std::vector<double> grid;     ///< delta values, k * 2pi/points
    std::vector<double> density;  ///< (1/2pi) |sum_n amps[n] e^{i n delta}|^2
};

/// Sample the phase-difference density. Requires points >= 4*(total+1); the
/// integrand is a trigonometric polynomial of degree total, so the periodic
/// trapezoid integral of the result is exact at this sampling.
PhaseDensity phase_difference_density(const TwoModeState& ancilla, int points);

/// The joint phase density of a fixed-total-number state factorizes as
/// P(theta_A, theta_B) = (1/2pi) * density(theta_A - theta_B): each single-mode
/// marginal is uniform and all structure lives in the difference.
struct JointPhaseDensity {
    double uniform_marginal = 0.0;  ///< 1/(2pi)
    PhaseDensity difference;
};

/// points == 0 selects the minimal adequate sampling 4*(total+1).
JointPhaseDensity joint_phase_density_factor(const TwoModeState& ancilla, int points = 0);

/// Expansion of the Kerr phase factor exp(-i vartheta n(n-1)), vartheta = pi J/K,
/// as a finite sum of K linear phase shifts: sum_k coeffs[k] e^{i n phases[k]}.
struct KerrDecomposition {
    int numerator = 0;    ///< J
    int denominator = 0;  ///< K, coprime with J
    double vartheta = 0.0;
    std::vector<double> phases;                 ///< phi_k = phi_0 + 2 pi k/K
    std::vector<std::complex<double>> coeffs;   ///< K complex weights
};

/// coeffs[j] = (1/K) sum_{n=0}^{K-1} e^{-i vartheta n(n-1)} e^{-i n phi_j},
/// with phi_0 = ((J(K-1)) mod 2) pi/K. The kernel in coeffs is conjugated
/// relative to the reconstruction sum so that the expansion identity holds
/// exactly for all n >= 0. Throws std::invalid_argument unless J, K are
/// coprime positive integers.
KerrDecomposition kerr_decomposition(int numerator, int denominator);

/// amps[n] -> e^{-i vartheta n(n-1)} amps[n]; norm preserved exactly.
TwoModeState apply_kerr(const TwoModeState& state, double vartheta);

}  // namespace ssr
