#include "ssr/single_optimal.hpp"

#include "ssr/errors.hpp"
#include "ssr/fock.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssr {

namespace {

constexpr double kInfeasible = -1.0;

// Signed value of |c'_{M+1}|^2 from |c'_0|^2 = 1, or kInfeasible when an
// interior coefficient fails to stay positive (exact zeros included: they
// would truncate the distribution and fabricate spurious roots).
double shoot(int total, double beta, std::vector<double>* seq_out = nullptr) {
    double prev = 0.0;
    double curr = 1.0;
    if (seq_out) {
        seq_out->clear();
        seq_out->push_back(1.0);
    }
    for (int n = 0; n <= total; ++n) {
        const double next = ((beta - 1.0) * curr * curr - curr * prev) / (curr + prev);
        if (n == total) return next;
        if (next <= 0.0 || !std::isfinite(next)) return kInfeasible;
        if (seq_out) seq_out->push_back(next);
        prev = curr;
        curr = next;
    }
    return kInfeasible;  // not reached; total >= 0 returns inside the loop
}

double boundary_offset(int total, double eps) {
    return std::cos(2.0 * std::numbers::pi * (eps - 1.0) / (total + 2.0 * eps));
}

// Residual of the n = 1 consistency relation after substituting the boundary
// expression for the offset; its roots are the admissible epsilon values.
double ansatz_equation(int total, double eps) {
    const double denom = total + 2.0 * eps;
    const double offset = boundary_offset(total, eps);
    const double lhs = offset - std::cos(2.0 * std::numbers::pi * (1.0 + eps) / denom);
    const double rhs = (offset - std::cos(2.0 * std::numbers::pi * eps / denom)) *
                       (4.0 * offset * offset - 1.0);
    return lhs - rhs;
}

}  // namespace

double recurrence_step(double prev, double curr, double beta) {
    if (curr + prev == 0.0) {
        throw std::domain_error("recurrence_step: degenerate input, curr + prev == 0");
    }
    return ((beta - 1.0) * curr * curr - curr * prev) / (curr + prev);
}

RecurrenceSolution solve_recurrence(int total, double tol) {
    if (total < 0) throw std::invalid_argument("solve_recurrence: total must be >= 0");
    if (!(tol > 0.0)) throw std::invalid_argument("solve_recurrence: tol must be positive");

    RecurrenceSolution out;
    out.total = total;
    if (total == 0) {
        out.probs = {1.0};
        out.beta = std::numeric_limits<double>::quiet_NaN();  // no interior index fixes it
        out.boundary_residual = 0.0;
        return out;
    }

    double lo = 1.0 + 1e-9;
    double hi = 4.0;
    if (!(shoot(total, lo) < 0.0 && shoot(total, hi) >= 0.0)) {
        bool found = false;
        double prev_beta = lo;
        double prev_val = shoot(total, lo);
        for (double b = 1.25; b <= 8.0 + 1e-12; b += 0.25) {
            const double val = shoot(total, b);
            if (prev_val < 0.0 && val >= 0.0) {
                lo = prev_beta;
                hi = b;
                found = true;
                break;
            }
            prev_beta = b;
            prev_val = val;
        }
        if (!found) {
            throw no_root_error("solve_recurrence: no sign change for beta in [1+1e-9, 8] at M=" +
                                std::to_string(total));
        }
    }

    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval exhausted at double resolution
        const double val = shoot(total, mid);
        if (val < 0.0) {
            lo = mid;
        } else {
            hi = mid;
            if (val <= tol) break;
        }
    }

    std::vector<double> seq;
    const double residual_raw = shoot(total, hi, &seq);  // feasible side
    double sum = 0.0;
    for (double v : seq) sum += v;
    out.beta = hi;
    out.boundary_residual = residual_raw / sum;
    out.probs.resize(static_cast<std::size_t>(total) + 1);
    for (int n = 0; n <= total; ++n) out.probs[static_cast<std::size_t>(n)] = seq[static_cast<std::size_t>(n)] / sum;
    return out;
}

std::vector<double> ansatz_coefficients(const AnsatzParams& params) {
    if (!(params.norm > 0.0)) {
        throw std::invalid_argument("ansatz_coefficients: norm must be positive");
    }
    std::vector<double> probs(static_cast<std::size_t>(params.total) + 1);
    for (int n = 0; n <= params.total; ++n) {
        double v = (params.offset - std::cos(params.angular_step * (n + params.epsilon))) / params.norm;
        if (v < 0.0) {
            if (v < -1e-14) {
                throw std::invalid_argument("ansatz_coefficients: negative coefficient at n=" +
                                            std::to_string(n));
            }
            v = 0.0;
        }
        probs[static_cast<std::size_t>(n)] = v;
    }
    return probs;
}

AnsatzParams solve_ansatz_exact(int total, double tol) {
    if (total < 1) throw std::invalid_argument("solve_ansatz_exact: total must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("solve_ansatz_exact: tol must be positive");

    const double eps_lo = 1e-3;
    const double eps_hi = 0.5 * total + 2.0;
    const int scan_points = 2000 + 400 * total;

    bool have_best = false;
    AnsatzParams best;
    double best_ep = -1.0;

    auto consider = [&](double eps_root) {
        if (std::abs(ansatz_equation(total, eps_root)) > tol) return;
        const double offset = boundary_offset(total, eps_root);
        const double step = 2.0 * std::numbers::pi / (total + 2.0 * eps_root);
        const double beta = 4.0 * offset * offset;
        // a genuine solution also satisfies the recurrence parameterization
        if (std::abs(beta - (2.0 + 2.0 * std::cos(step))) > 1e-8) return;
        double norm = 0.0;
        for (int n = 0; n <= total; ++n) {
            const double v = offset - std::cos(step * (n + eps_root));
            if (v < -1e-12) return;
            norm += std::max(v, 0.0);
        }
        if (!(norm > 1e-12)) return;
        AnsatzParams cand;
        cand.total = total;
        cand.offset = offset;
        cand.norm = norm;
        cand.epsilon = eps_root;
        cand.angular_step = step;
        cand.beta = beta;
        double ep = 0.0;
        try {
            ep = particle_entanglement_single(
                TwoModeState::from_probabilities(ansatz_coefficients(cand)));
        } catch (const std::invalid_argument&) {
            return;  // borderline negative coefficient: not an admissible distribution
        }
        const bool better = !have_best || ep > best_ep + 1e-12 ||
                            (std::abs(ep - best_ep) <= 1e-12 &&
                             std::abs(eps_root - 1.5) < std::abs(best.epsilon - 1.5));
        if (better) {
            best = cand;
            best_ep = ep;
            have_best = true;
        }
    };

    std::vector<double> scan_eps(static_cast<std::size_t>(scan_points) + 1);
    std::vector<double> scan_val(static_cast<std::size_t>(scan_points) + 1);
    for (int i = 0; i <= scan_points; ++i) {
        scan_eps[static_cast<std::size_t>(i)] = eps_lo + (eps_hi - eps_lo) * i / scan_points;
        scan_val[static_cast<std::size_t>(i)] =
            ansatz_equation(total, scan_eps[static_cast<std::size_t>(i)]);
    }

    // crossing roots via sign-change bisection
    for (int i = 1; i <= scan_points; ++i) {
        const double fa0 = scan_val[static_cast<std::size_t>(i) - 1];
        const double fb0 = scan_val[static_cast<std::size_t>(i)];
        if (!std::isfinite(fa0) || !std::isfinite(fb0) || fa0 * fb0 > 0.0 || fa0 == fb0) continue;
        double a = scan_eps[static_cast<std::size_t>(i) - 1];
        double b = scan_eps[static_cast<std::size_t>(i)];
        double fa = fa0;
        for (int it = 0; it < 120; ++it) {
            const double m = 0.5 * (a + b);
            const double fm = ansatz_equation(total, m);
            if (fa * fm <= 0.0) {
                b = m;
            } else {
                a = m;
                fa = fm;
            }
        }
        consider(0.5 * (a + b));
    }

    // tangency roots: the equation can touch zero without crossing when two
    // crossing roots collide (this happens at M = 9); refine local minima of
    // |g| by golden-section. The |g| landscape is quadratically flat at a
    // tangency, so polish inside the plateau with the recurrence-consistency
    // residual 4A^2 - (2 + 2 cos xi), which crosses zero with nonzero slope.
    auto consistency = [&](double eps) {
        const double offset = boundary_offset(total, eps);
        return 4.0 * offset * offset -
               (2.0 + 2.0 * std::cos(2.0 * std::numbers::pi / (total + 2.0 * eps)));
    };
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int i = 1; i < scan_points; ++i) {
        const double m0 = std::abs(scan_val[static_cast<std::size_t>(i) - 1]);
        const double m1 = std::abs(scan_val[static_cast<std::size_t>(i)]);
        const double m2 = std::abs(scan_val[static_cast<std::size_t>(i) + 1]);
        if (!(m1 <= m0 && m1 <= m2) || !std::isfinite(m1)) continue;
        double a = scan_eps[static_cast<std::size_t>(i) - 1];
        double b = scan_eps[static_cast<std::size_t>(i) + 1];
        double c = b - golden * (b - a);
        double d = a + golden * (b - a);
        for (int it = 0; it < 120; ++it) {
            if (std::abs(ansatz_equation(total, c)) < std::abs(ansatz_equation(total, d))) {
                b = d;
            } else {
                a = c;
            }
            c = b - golden * (b - a);
            d = a + golden * (b - a);
        }
        double eps_root = 0.5 * (a + b);
        double pa = eps_root - 1e-5;
        double pb = eps_root + 1e-5;
        double fa = consistency(pa);
        if (fa * consistency(pb) < 0.0) {
            for (int it = 0; it < 80; ++it) {
                const double m = 0.5 * (pa + pb);
                const double fm = consistency(m);
                if (fa * fm <= 0.0) {
                    pb = m;
                } else {
                    pa = m;
                    fa = fm;
                }
            }
            eps_root = 0.5 * (pa + pb);
        }
        consider(eps_root);
    }

    if (!have_best) {
        throw no_root_error("solve_ansatz_exact: no admissible epsilon root in (0, M/2+2) at M=" +
                            std::to_string(total));
    }
    return best;
}

std::vector<double> ansatz_large_m(int total) {
    if (total < 1) throw std::invalid_argument("ansatz_large_m: total must be >= 1");
    std::vector<double> probs(static_cast<std::size_t>(total) + 1);
    double sum = 0.0;
    for (int n = 0; n <= total; ++n) {
        const double s = std::sin(std::numbers::pi * (n + 1.5) / (total + 3.0));
        const double v = 2.0 / (total + 1.0) * s * s;
        probs[static_cast<std::size_t>(n)] = v;
        sum += v;
    }
    for (double& v : probs) v /= sum;
    return probs;
}

}  // namespace ssr
