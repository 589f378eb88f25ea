#include "ssr/reference_states.hpp"

#include "ssr/single_optimal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ssr {

namespace {

TwoModeState sine_family(int total, double eps) {
    if (total < 0) throw std::invalid_argument("reference state: total must be >= 0");
    std::vector<std::complex<double>> amps(static_cast<std::size_t>(total) + 1);
    double norm = 0.0;
    for (int n = 0; n <= total; ++n) {
        const double a = std::sin(std::numbers::pi * (n + eps) / (total + 2.0 * eps));
        amps[static_cast<std::size_t>(n)] = a;
        norm += a * a;
    }
    norm = std::sqrt(norm);
    for (auto& a : amps) a /= norm;
    return TwoModeState(std::move(amps));
}

}  // namespace

TwoModeState berry_wiseman(int total) { return sine_family(total, 1.0); }

TwoModeState summy_pegg(int total) { return sine_family(total, 0.84); }

TwoModeState two_mode_coherent(int total) {
    if (total < 0) throw std::invalid_argument("two_mode_coherent: total must be >= 0");
    std::vector<double> log_w(static_cast<std::size_t>(total) + 1, 0.0);
    double max_lw = 0.0;
    for (int n = 1; n <= total; ++n) {
        // log of (M/2)^n / n!
        log_w[static_cast<std::size_t>(n)] =
            n * std::log(total / 2.0) - std::lgamma(n + 1.0);
        max_lw = std::max(max_lw, log_w[static_cast<std::size_t>(n)]);
    }
    std::vector<std::complex<double>> amps(log_w.size());
    double norm = 0.0;
    for (std::size_t n = 0; n < log_w.size(); ++n) {
        const double w = std::exp(log_w[n] - max_lw);
        amps[n] = std::sqrt(w);
        norm += w;
    }
    norm = std::sqrt(norm);
    for (auto& a : amps) a /= norm;
    return TwoModeState(std::move(amps));
}

TwoModeState binomial_state(int total, double p) {
    if (total < 0) throw std::invalid_argument("binomial_state: total must be >= 0");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("binomial_state: p must lie in (0, 1)");
    std::vector<double> probs(static_cast<std::size_t>(total) + 1);
    // running product keeps the binomial weights exact to rounding
    double w = std::pow(1.0 - p, total);
    for (int n = 0; n <= total; ++n) {
        probs[static_cast<std::size_t>(n)] = w;
        w *= static_cast<double>(total - n) / (n + 1) * (p / (1.0 - p));
    }
    return TwoModeState::from_probabilities(probs);
}

TwoModeState shared_phase_state(int total) {
    if (total < 0) throw std::invalid_argument("shared_phase_state: total must be >= 0");
    const double a = 1.0 / std::sqrt(total + 1.0);
    return TwoModeState(std::vector<std::complex<double>>(static_cast<std::size_t>(total) + 1, a));
}

namespace {

double merit_from_optimum(double optimal_ep, double ep) {
    double d = (optimal_ep - ep) / optimal_ep;
    if (std::abs(d) <= 1e-12) d = 0.0;
    return d;
}

}  // namespace

double figure_of_merit(const TwoModeState& ancilla, int total) {
    if (total < 1) {
        throw std::invalid_argument("figure_of_merit: undefined at M = 0 (optimal entanglement is zero)");
    }
    if (ancilla.total() != total) {
        throw std::invalid_argument("figure_of_merit: ancilla total does not match M");
    }
    const auto optimal = solve_recurrence(total);
    const double optimal_ep =
        particle_entanglement_single(TwoModeState::from_probabilities(optimal.probs));
    return merit_from_optimum(optimal_ep, particle_entanglement_single(ancilla));
}

MeritReport compare_references(int total) {
    if (total < 1) throw std::invalid_argument("compare_references: total must be >= 1");
    const auto optimal = solve_recurrence(total);
    const auto optimal_state = TwoModeState::from_probabilities(optimal.probs);
    const double optimal_ep = particle_entanglement_single(optimal_state);

    MeritReport report;
    report.total = total;
    auto push = [&](const std::string& label, const TwoModeState& state) {
        const double ep = particle_entanglement_single(state);
        report.entries.push_back({label, ep, merit_from_optimum(optimal_ep, ep)});
    };
    push("optimal", optimal_state);
    push("berry-wiseman", berry_wiseman(total));
    push("summy-pegg", summy_pegg(total));
    push("coherent", two_mode_coherent(total));
    push("binomial", binomial_state(total));
    push("shared-phase", shared_phase_state(total));
    return report;
}

}  // namespace ssr
