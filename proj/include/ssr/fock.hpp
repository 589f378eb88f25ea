#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ssr {

/// Pure state of a fixed total number of identical bosons shared between two
/// sites A and B: sum_n amps[n] |n, total-n>. Amplitudes are stored as complex
/// numbers even though only the moduli enter the entanglement measures, so the
/// same type carries phase structure for the phase-distribution machinery.
///
/// Indices outside 0..total read as zero amplitude; this encodes the boundary
/// values |c_{-1}|^2 = |c_{total+1}|^2 = 0 used throughout the solvers.
class TwoModeState {
public:
    /// Total = amps.size()-1. Requires sum |amps[n]|^2 = 1 within 1e-12.
    explicit TwoModeState(std::vector<std::complex<double>> amps);

    /// Real nonnegative amplitudes sqrt(probs[n]). Accepts inputs normalized
    /// within 1e-9 and renormalizes exactly (solver outputs carry roundoff).
    static TwoModeState from_probabilities(std::span<const double> probs);

    int total() const { return static_cast<int>(amps_.size()) - 1; }

    std::complex<double> amp(int n) const {
        if (n < 0 || n > total()) return {0.0, 0.0};
        return amps_[static_cast<std::size_t>(n)];
    }

    double prob(int n) const { return std::norm(amp(n)); }

    const std::vector<std::complex<double>>& amps() const { return amps_; }
    std::vector<double> probabilities() const;

private:
    std::vector<std::complex<double>> amps_;
};

/// One fixed-local-particle-number block of a system (x) ancilla product state.
struct Sector {
    int local_count = 0;          ///< particles at site A
    double probability = 0.0;     ///< p_k
    std::vector<double> weights;  ///< Schmidt weights; empty when probability ~ 0
};

struct SectorDecomposition {
    std::vector<Sector> sectors;  ///< k = 0 .. N+M, in order
};

/// Decompose system (x) ancilla into local-particle-number sectors.
/// p_k = sum_n |d_n|^2 |c_{k-n}|^2 and the sector Schmidt weights are the
/// normalized product moduli: the A-side kets |n> (x) |k-n> are mutually
/// orthonormal across n, so no diagonalization is involved.
SectorDecomposition sector_decompose(const TwoModeState& system, const TwoModeState& ancilla);

/// Entropy of entanglement in bits, -sum q log2 q with 0 log 0 == 0.
/// Throws std::invalid_argument on a negative weight.
double entanglement_of_modes(std::span<const double> weights);

/// Accessible (particle) entanglement of system (x) ancilla under the local
/// particle-number superselection rule: the p_k-weighted average of the modal
/// entanglement of each sector. Invariant under any per-amplitude phase
/// rotation of either input.
double particle_entanglement(const TwoModeState& system, const TwoModeState& ancilla);

/// Closed form of particle_entanglement for a single equally shared system
/// particle: (1/(2 ln 2)) sum_{n=0}^{M+1} [-2 u_n ln u_n + (u_{n-1}+u_n) ln(u_{n-1}+u_n)]
/// with u_n = |c_n|^2.
double particle_entanglement_single(const TwoModeState& ancilla);

}  // namespace ssr
