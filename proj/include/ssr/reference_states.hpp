#pragma once

#include "ssr/fock.hpp"

#include <string>
#include <vector>

namespace ssr {

/// Phase-optimized two-mode states amps[n] ~ sin(pi (n+1)/(M+2)), the optimum
/// for phase-shift estimation at fixed total particle number.
TwoModeState berry_wiseman(int total);

/// Same sine family with edge parameter 0.84, the minimum-phase-variance
/// states for a bounded particle number distribution.
TwoModeState summy_pegg(int total);

/// Two-mode analogue of a coherent state truncated to the (M+1)-dimensional
/// shared-number space: amps[n] ~ sqrt((M/2)^n / n!). Log-domain accumulation.
TwoModeState two_mode_coherent(int total);

/// |amps[n]|^2 = C(M,n) p^n (1-p)^(M-n). Requires 0 < p < 1.
TwoModeState binomial_state(int total, double p = 0.5);

/// Uniform amplitudes 1/sqrt(M+1): maximal asymmetry under the local
/// particle-number superselection rule.
TwoModeState shared_phase_state(int total);

/// Relative shortfall of a reference state against the optimal reference at
/// the same M, for a single shared system particle:
///   D = (E_opt - E_P(ancilla)) / E_opt, in [0, 1].
/// Values within 1e-12 of zero snap to exactly zero. Throws for M = 0 where
/// the optimal entanglement vanishes.
double figure_of_merit(const TwoModeState& ancilla, int total);

struct MeritEntry {
    std::string label;
    double particle_ent = 0.0;  ///< E_P against the single-particle system
    double merit = 0.0;         ///< D
};

struct MeritReport {
    int total = 0;
    std::vector<MeritEntry> entries;
};

/// All comparison families at one M, in fixed order:
/// optimal, berry-wiseman, summy-pegg, coherent, binomial, shared-phase.
MeritReport compare_references(int total);

}  // namespace ssr
