#pragma once

#include "ssr/fock.hpp"

#include <span>
#include <vector>

namespace ssr {

/// Optimal ancilla for an N = M shared-phase system, from the shooting solver.
struct GeneralSolution {
    int total = 0;                           ///< M (= N)
    std::vector<double> probs;               ///< |c_m|^2, symmetric and unimodal
    int shots = 0;                           ///< bisection iterations used
    double max_stationarity_residual = 0.0;  ///< spread of the Lagrange value over m
};

/// Per-index Lagrange stationarity value
///   alpha_1(m) = sum_n |d_n|^2 [ -log2(|d_n c_m|^2) + log2 p_{n+m} ].
/// Constant over m at a true optimum; callers take the max-min spread as a
/// stationarity residual. Returns +infinity when |c_m|^2 = 0.
double lagrange_residual(const TwoModeState& system, const TwoModeState& ancilla, int m);

/// max_m alpha_1(m) - min_m alpha_1(m) over all ancilla indices.
double lagrange_spread(const TwoModeState& system, const TwoModeState& ancilla);

/// Optimal ancilla ratio x = |c_1/c_0|^2 for a single-particle system and a
/// single-particle ancilla (N = M = 1), system probabilities (d0_sq, d1_sq).
/// Solves the stationarity condition alpha_1(0) = alpha_1(1), i.e. the root of
///   2^(-t/d0_sq) + 2^(-t/d1_sq) = 1
/// followed by x = (d1_sq/d0_sq) 2^(t (d0_sq-d1_sq)/(d0_sq d1_sq)); the root t
/// equals the particle entanglement of the optimal pair. The optimal ancilla
/// probabilities are (1, x)/(1+x).
double solve_n1m1(double d0_sq, double d1_sq);

/// Shooting solver for the N = M shared-phase optimum. The Lagrange exponential
/// cancels between consecutive stationarity relations, leaving
///   |c_{m+1}|^{2(M+1)} = |c_m|^{2(M+1)} (1-S_m)/S_m,  S_m = sum_{j<=m}|c_j|^2,
/// so the whole distribution follows from |c_0|^2. Bisects |c_0|^2 over
/// (1e-15, 1/(M+1)] until sum_j |c_j|^2 = 1 within tol; a running sum that
/// reaches 1 before m = M marks the trial infeasible (upper-side sign).
GeneralSolution solve_shared_phase(int total, double tol = 1e-12);

/// Best cosine-form approximation to a target distribution.
struct TrialFit {
    double offset = 0.0;   ///< A of the trial probs[n] = (A - cos(2 pi (n+eps)/(M+2 eps)))/B
    double epsilon = 0.0;
    double overlap = 0.0;  ///< sum_n sqrt(target[n] * trial[n])
};

/// Maximize the amplitude overlap over (offset, epsilon) by Nelder-Mead from
/// (1, 3/2) plus a coarse-grid-seeded restart, searching offset in [-2, 50]
/// and epsilon in (0.05, 5M]. Candidates with negative trial probabilities
/// are rejected inside the search.
TrialFit fit_trial_state(int total, std::span<const double> target);

/// Bounds on the particle entanglement recovered by the uniform M-particle
/// ancilla: lower = (M+1-N)/(M+1) E_M(system), upper = lower + 2N/(M+1) E_M(system).
struct EntanglementBounds {
    double lower = 0.0;
    double upper = 0.0;
};

EntanglementBounds infinite_ancilla_bounds(const TwoModeState& system, int ancilla_total);

}  // namespace ssr
