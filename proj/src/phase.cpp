#include "ssr/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ssr {

PhaseDensity phase_difference_density(const TwoModeState& ancilla, int points) {
    const int m_total = ancilla.total();
    if (points < 4 * (m_total + 1)) {
        throw std::invalid_argument("phase_difference_density: need points >= 4*(M+1), got " +
                                    std::to_string(points));
    }
    PhaseDensity out;
    out.grid.resize(static_cast<std::size_t>(points));
    out.density.resize(static_cast<std::size_t>(points));
    const double two_pi = 2.0 * std::numbers::pi;
    for (int j = 0; j < points; ++j) {
        const double delta = two_pi * j / points;
        std::complex<double> amp_sum{0.0, 0.0};
        for (int n = 0; n <= m_total; ++n) {
            amp_sum += ancilla.amp(n) * std::polar(1.0, n * delta);
        }
        out.grid[static_cast<std::size_t>(j)] = delta;
        out.density[static_cast<std::size_t>(j)] = std::norm(amp_sum) / two_pi;
    }
    return out;
}

JointPhaseDensity joint_phase_density_factor(const TwoModeState& ancilla, int points) {
    if (points == 0) points = 4 * (ancilla.total() + 1);
    JointPhaseDensity out;
    out.uniform_marginal = 1.0 / (2.0 * std::numbers::pi);
    out.difference = phase_difference_density(ancilla, points);
    return out;
}

KerrDecomposition kerr_decomposition(int numerator, int denominator) {
    if (numerator < 1 || denominator < 1) {
        throw std::invalid_argument("kerr_decomposition: J and K must be positive");
    }
    if (std::gcd(numerator, denominator) != 1) {
        throw std::invalid_argument("kerr_decomposition: J and K must be coprime");
    }
    KerrDecomposition out;
    out.numerator = numerator;
    out.denominator = denominator;
    out.vartheta = std::numbers::pi * numerator / denominator;
    const double phi0 =
        ((static_cast<long long>(numerator) * (denominator - 1)) % 2) * std::numbers::pi / denominator;
    out.phases.resize(static_cast<std::size_t>(denominator));
    out.coeffs.resize(static_cast<std::size_t>(denominator));
    for (int j = 0; j < denominator; ++j) {
        const double phi = phi0 + 2.0 * std::numbers::pi * j / denominator;
        out.phases[static_cast<std::size_t>(j)] = phi;
        std::complex<double> c{0.0, 0.0};
        for (int n = 0; n < denominator; ++n) {
            c += std::polar(1.0, -out.vartheta * n * (n - 1)) * std::polar(1.0, -n * phi);
        }
        out.coeffs[static_cast<std::size_t>(j)] = c / static_cast<double>(denominator);
    }
    return out;
}

TwoModeState apply_kerr(const TwoModeState& state, double vartheta) {
    std::vector<std::complex<double>> amps = state.amps();
    for (int n = 0; n < static_cast<int>(amps.size()); ++n) {
        amps[static_cast<std::size_t>(n)] *=
            std::polar(1.0, -vartheta * static_cast<double>(n) * (n - 1));
    }
    return TwoModeState(std::move(amps));
}

}  // namespace ssr
