#include "ssr/general_optimal.hpp"

#include "ssr/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ssr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double lagrange_value(const TwoModeState& system, const SectorDecomposition& sectors,
                      const TwoModeState& ancilla, int m) {
    const double cm = ancilla.prob(m);
    if (!(cm > 0.0)) return kInf;
    double acc = 0.0;
    for (int n = 0; n <= system.total(); ++n) {
        const double dn = system.prob(n);
        if (!(dn > 0.0)) continue;
        // p_{n+m} >= dn*cm > 0 here
        acc += dn * (-std::log2(dn * cm) +
                     std::log2(sectors.sectors[static_cast<std::size_t>(n + m)].probability));
    }
    return acc;
}

// S_M - 1 for the trial edge weight t, iterated in the log domain.
// A running sum reaching 1 early is infeasible and counts as the upper side.
double shared_phase_shoot(int total, double t, std::vector<double>* probs_out = nullptr) {
    double log_u = std::log(t);
    double sum = t;
    if (probs_out) probs_out->assign(1, t);
    for (int m = 0; m < total; ++m) {
        if (sum >= 1.0) return 2.0;
        log_u += std::log((1.0 - sum) / sum) / (total + 1);
        const double u = std::exp(log_u);
        sum += u;
        if (probs_out) probs_out->push_back(u);
    }
    return sum - 1.0;
}

// Amplitude overlap between target and the cosine-form trial at (offset, eps);
// -1 marks an invalid candidate (negative probabilities or degenerate norm).
double trial_overlap(int total, std::span<const double> target, double offset, double eps) {
    if (!(eps > 0.05) || eps > 5.0 * total + 5.0 || !(offset >= -2.0) || offset > 50.0) return -1.0;
    const double denom = total + 2.0 * eps;
    double norm = 0.0;
    double dot = 0.0;
    for (int n = 0; n <= total; ++n) {
        const double v = offset - std::cos(2.0 * std::numbers::pi * (n + eps) / denom);
        if (v < -1e-14) return -1.0;
        norm += std::max(v, 0.0);
    }
    if (!(norm > 1e-300)) return -1.0;
    for (int n = 0; n <= total; ++n) {
        const double v = std::max(offset - std::cos(2.0 * std::numbers::pi * (n + eps) / denom), 0.0);
        dot += std::sqrt(target[static_cast<std::size_t>(n)] * v / norm);
    }
    return dot;
}

struct SimplexPoint {
    double offset = 0.0;
    double eps = 0.0;
    double value = -1.0;  // overlap; larger is better
};

// Plain two-dimensional Nelder-Mead maximization of the trial overlap.
SimplexPoint nelder_mead(int total, std::span<const double> target, double offset0, double eps0) {
    auto eval = [&](double a, double e) {
        return SimplexPoint{a, e, trial_overlap(total, target, a, e)};
    };
    std::array<SimplexPoint, 3> simplex = {
        eval(offset0, eps0),
        eval(offset0 + 0.2, eps0),
        eval(offset0, eps0 + std::max(0.5, 0.05 * total)),
    };
    auto order = [&] {
        std::sort(simplex.begin(), simplex.end(),
                  [](const SimplexPoint& a, const SimplexPoint& b) { return a.value > b.value; });
    };
    order();
    for (int it = 0; it < 4000; ++it) {
        const SimplexPoint& best = simplex[0];
        const SimplexPoint& worst = simplex[2];
        const double size = std::max({std::abs(simplex[0].offset - simplex[2].offset),
                                      std::abs(simplex[0].eps - simplex[2].eps),
                                      std::abs(simplex[1].offset - simplex[2].offset),
                                      std::abs(simplex[1].eps - simplex[2].eps)});
        if (size < 1e-11 && std::abs(best.value - worst.value) < 1e-15) break;
        const double cen_a = 0.5 * (simplex[0].offset + simplex[1].offset);
        const double cen_e = 0.5 * (simplex[0].eps + simplex[1].eps);
        const SimplexPoint refl = eval(cen_a + (cen_a - worst.offset), cen_e + (cen_e - worst.eps));
        if (refl.value > simplex[0].value) {
            const SimplexPoint expd =
                eval(cen_a + 2.0 * (cen_a - worst.offset), cen_e + 2.0 * (cen_e - worst.eps));
            simplex[2] = (expd.value > refl.value) ? expd : refl;
        } else if (refl.value > simplex[1].value) {
            simplex[2] = refl;
        } else {
            const SimplexPoint contr =
                eval(cen_a + 0.5 * (worst.offset - cen_a), cen_e + 0.5 * (worst.eps - cen_e));
            if (contr.value > worst.value) {
                simplex[2] = contr;
            } else {
                for (int i = 1; i < 3; ++i) {
                    simplex[static_cast<std::size_t>(i)] =
                        eval(0.5 * (simplex[0].offset + simplex[static_cast<std::size_t>(i)].offset),
                             0.5 * (simplex[0].eps + simplex[static_cast<std::size_t>(i)].eps));
                }
            }
        }
        order();
    }
    return simplex[0];
}

}  // namespace

double lagrange_residual(const TwoModeState& system, const TwoModeState& ancilla, int m) {
    if (m < 0 || m > ancilla.total()) {
        throw std::invalid_argument("lagrange_residual: index outside 0..M");
    }
    return lagrange_value(system, sector_decompose(system, ancilla), ancilla, m);
}

double lagrange_spread(const TwoModeState& system, const TwoModeState& ancilla) {
    const auto sectors = sector_decompose(system, ancilla);
    double lo = kInf, hi = -kInf;
    for (int m = 0; m <= ancilla.total(); ++m) {
        const double v = lagrange_value(system, sectors, ancilla, m);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi - lo;
}

double solve_n1m1(double d0_sq, double d1_sq) {
    if (!(d0_sq > 0.0) || !(d1_sq > 0.0)) {
        throw std::invalid_argument("solve_n1m1: system probabilities must be positive");
    }
    if (std::abs(d0_sq + d1_sq - 1.0) > 1e-9) {
        throw std::invalid_argument("solve_n1m1: system probabilities must sum to 1");
    }
    const double a = d0_sq / (d0_sq + d1_sq);
    const double b = 1.0 - a;
    auto excess = [&](double t) { return std::exp2(-t / a) + std::exp2(-t / b) - 1.0; };
    double lo = 0.0;
    double hi = 1.0;
    if (excess(hi) >= 0.0) {
        // cannot happen for valid inputs; widen defensively before giving up
        while (excess(hi) >= 0.0 && hi < 64.0) hi *= 2.0;
        if (excess(hi) >= 0.0) {
            throw no_root_error("solve_n1m1: stationarity equation has no root");
        }
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double alpha = 0.5 * (lo + hi);  // equals the optimal particle entanglement
    return (b / a) * std::exp2(alpha * (a - b) / (a * b));
}

GeneralSolution solve_shared_phase(int total, double tol) {
    if (total < 1) throw std::invalid_argument("solve_shared_phase: total must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("solve_shared_phase: tol must be positive");

    double lo = 1e-15;
    double hi = 1.0 / (total + 1);
    if (!(shared_phase_shoot(total, lo) < 0.0 && shared_phase_shoot(total, hi) >= 0.0)) {
        // grid scan fallback for a sign change inside the canonical bracket
        bool found = false;
        const int grid = 1000;
        double prev_t = hi / grid;
        double prev_f = shared_phase_shoot(total, prev_t);
        for (int i = 2; i <= grid; ++i) {
            const double t = hi * i / grid;
            const double f = shared_phase_shoot(total, t);
            if (prev_f < 0.0 && f >= 0.0) {
                lo = prev_t;
                hi = t;
                found = true;
                break;
            }
            prev_t = t;
            prev_f = f;
        }
        if (!found) {
            throw no_root_error("solve_shared_phase: no bracket for |c_0|^2 in (0, 1/(M+1)] at M=" +
                                std::to_string(total));
        }
    }

    GeneralSolution out;
    out.total = total;
    for (int it = 0; it < 200; ++it) {
        ++out.shots;
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f = shared_phase_shoot(total, mid);
        if (f < 0.0) {
            lo = mid;
            if (-f <= tol) break;
        } else {
            hi = mid;
        }
    }

    std::vector<double> probs;
    shared_phase_shoot(total, lo, &probs);  // feasible side: complete sequence
    double sum = 0.0;
    for (double v : probs) sum += v;
    for (double& v : probs) v /= sum;
    out.probs = std::move(probs);

    const auto uniform_system = TwoModeState::from_probabilities(
        std::vector<double>(static_cast<std::size_t>(total) + 1, 1.0 / (total + 1)));
    out.max_stationarity_residual =
        lagrange_spread(uniform_system, TwoModeState::from_probabilities(out.probs));
    return out;
}

TrialFit fit_trial_state(int total, std::span<const double> target) {
    if (static_cast<int>(target.size()) != total + 1) {
        throw std::invalid_argument("fit_trial_state: target length must be total+1");
    }
    double sum = 0.0;
    for (double v : target) {
        if (v < 0.0 || !std::isfinite(v)) {
            throw std::invalid_argument("fit_trial_state: target must be a probability vector");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("fit_trial_state: target must be normalized");
    }

    // coarse grid seed, then local polish from both the canonical start and
    // the grid winner; the overlap landscape has several basins
    double grid_a = 1.0, grid_e = 1.5, grid_v = -1.0;
    for (int ia = 0; ia <= 40; ++ia) {
        const double a = -1.0 + 4.0 * ia / 40.0;
        for (int ie = 1; ie <= 40; ++ie) {
            const double e = 0.1 + (2.0 * total) * ie / 40.0;
            const double v = trial_overlap(total, target, a, e);
            if (v > grid_v) {
                grid_v = v;
                grid_a = a;
                grid_e = e;
            }
        }
    }
    const SimplexPoint canonical = nelder_mead(total, target, 1.0, 1.5);
    const SimplexPoint seeded = nelder_mead(total, target, grid_a, grid_e);
    const SimplexPoint& best = (canonical.value >= seeded.value) ? canonical : seeded;
    if (!(best.value > 0.0)) {
        throw no_root_error("fit_trial_state: no admissible trial state found");
    }
    return TrialFit{best.offset, best.eps, best.value};
}

EntanglementBounds infinite_ancilla_bounds(const TwoModeState& system, int ancilla_total) {
    const int n_sys = system.total();
    if (ancilla_total < n_sys) {
        throw std::invalid_argument("infinite_ancilla_bounds: require ancilla total >= system total");
    }
    const auto probs = system.probabilities();
    const double modal = entanglement_of_modes(probs);
    const double lower = static_cast<double>(ancilla_total + 1 - n_sys) / (ancilla_total + 1) * modal;
    const double upper = lower + 2.0 * n_sys / (ancilla_total + 1.0) * modal;
    return {lower, upper};
}

}  // namespace ssr
