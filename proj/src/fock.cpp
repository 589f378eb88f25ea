#include "ssr/fock.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ssr {

namespace {

constexpr double kNormTol = 1e-12;
// Sector probabilities below this contribute exactly zero entropy; avoids
// NaN from log of denormal underflow.
constexpr double kZeroFloor = 1e-300;

}  // namespace

TwoModeState::TwoModeState(std::vector<std::complex<double>> amps) : amps_(std::move(amps)) {
    if (amps_.empty()) {
        throw std::invalid_argument("TwoModeState: amplitude vector is empty");
    }
    double norm = 0.0;
    for (const auto& a : amps_) norm += std::norm(a);
    if (std::abs(norm - 1.0) > kNormTol) {
        throw std::invalid_argument("TwoModeState: amplitudes are not normalized (sum |a|^2 = " +
                                    std::to_string(norm) + ")");
    }
}

TwoModeState TwoModeState::from_probabilities(std::span<const double> probs) {
    if (probs.empty()) {
        throw std::invalid_argument("TwoModeState: probability vector is empty");
    }
    double sum = 0.0;
    for (double p : probs) {
        if (p < -1e-12 || !std::isfinite(p)) {
            throw std::invalid_argument("TwoModeState: negative or non-finite probability");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("TwoModeState: probabilities sum to " + std::to_string(sum));
    }
    std::vector<std::complex<double>> amps;
    amps.reserve(probs.size());
    for (double p : probs) {
        amps.emplace_back(std::sqrt(std::max(p, 0.0) / sum), 0.0);
    }
    return TwoModeState(std::move(amps));
}

std::vector<double> TwoModeState::probabilities() const {
    std::vector<double> out;
    out.reserve(amps_.size());
    for (const auto& a : amps_) out.push_back(std::norm(a));
    return out;
}

SectorDecomposition sector_decompose(const TwoModeState& system, const TwoModeState& ancilla) {
    const int n_sys = system.total();
    const int n_anc = ancilla.total();
    SectorDecomposition out;
    out.sectors.reserve(static_cast<std::size_t>(n_sys + n_anc + 1));
    for (int k = 0; k <= n_sys + n_anc; ++k) {
        Sector sector;
        sector.local_count = k;
        const int lo = std::max(0, k - n_anc);
        const int hi = std::min(n_sys, k);
        double pk = 0.0;
        for (int n = lo; n <= hi; ++n) pk += system.prob(n) * ancilla.prob(k - n);
        sector.probability = pk;
        if (pk > kZeroFloor) {
            sector.weights.reserve(static_cast<std::size_t>(hi - lo + 1));
            for (int n = lo; n <= hi; ++n) {
                sector.weights.push_back(system.prob(n) * ancilla.prob(k - n) / pk);
            }
        }
        out.sectors.push_back(std::move(sector));
    }
    return out;
}

double entanglement_of_modes(std::span<const double> weights) {
    double entropy = 0.0;
    for (double q : weights) {
        if (q < 0.0) {
            throw std::invalid_argument("entanglement_of_modes: negative weight");
        }
        if (q > kZeroFloor) entropy -= q * std::log2(q);
    }
    return entropy;
}

double particle_entanglement(const TwoModeState& system, const TwoModeState& ancilla) {
    const auto decomposition = sector_decompose(system, ancilla);
    double total = 0.0;
    for (const auto& sector : decomposition.sectors) {
        if (sector.probability > kZeroFloor) {
            total += sector.probability * entanglement_of_modes(sector.weights);
        }
    }
    return total;
}

double particle_entanglement_single(const TwoModeState& ancilla) {
    const int m_total = ancilla.total();
    double acc = 0.0;
    for (int n = 0; n <= m_total + 1; ++n) {
        const double curr = ancilla.prob(n);
        const double prev = ancilla.prob(n - 1);
        if (curr > kZeroFloor) acc -= 2.0 * curr * std::log(curr);
        if (curr + prev > kZeroFloor) acc += (curr + prev) * std::log(curr + prev);
    }
    return acc / (2.0 * std::numbers::ln2);
}

}  // namespace ssr
