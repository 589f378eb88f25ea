#pragma once

#include <vector>

namespace ssr {

/// Numerical solution of the stationarity recurrence for the reference state
/// that maximizes the particle entanglement of a single shared particle.
struct RecurrenceSolution {
    int total = 0;                  ///< M
    std::vector<double> probs;      ///< |c_n|^2, n = 0..M, normalized
    double beta = 0.0;              ///< e^alpha at the root (NaN for M = 0)
    double boundary_residual = 0.0; ///< |c_{M+1}|^2 implied by one more step, after normalization
};

/// One step of the stationarity recurrence:
/// |c_{n+1}|^2 = ((beta-1) curr^2 - curr*prev) / (curr + prev).
/// May return a negative value; that signals an infeasible beta to the solver.
/// Throws std::domain_error when curr + prev == 0.
double recurrence_step(double prev, double curr, double beta);

/// Shooting solve: fix |c'_0|^2 = 1, iterate the recurrence up to n = M,
/// normalize by the running sum, and bisect beta until the implied
/// |c_{M+1}|^2 crosses zero with magnitude below tol (relative to |c'_0|^2).
/// Initial bracket [1+1e-9, 4]; scans up to 8 in steps of 0.25 before
/// throwing no_root_error. Any nonpositive interior coefficient marks the
/// trial beta infeasible and counts as the negative side of the bracket.
RecurrenceSolution solve_recurrence(int total, double tol = 1e-12);

/// Parameters of the trigonometric closed form
///   probs[n] = (offset - cos(angular_step * (n + epsilon))) / norm
/// which satisfies the recurrence when beta = 4*offset^2 = 2 + 2*cos(angular_step).
struct AnsatzParams {
    int total = 0;             ///< M
    double offset = 0.0;       ///< cosine offset (A)
    double norm = 0.0;         ///< normalization divisor (B)
    double epsilon = 0.0;      ///< fractional padding beyond the index range
    double angular_step = 0.0; ///< 2*pi / (total + 2*epsilon)
    double beta = 0.0;         ///< 4*offset^2
};

/// Evaluate the closed form for n = 0..total. Throws std::invalid_argument on
/// a nonpositive norm or a genuinely negative coefficient (values within
/// rounding of zero are clamped to zero).
std::vector<double> ansatz_coefficients(const AnsatzParams& params);

/// Determine (offset, epsilon) from the boundary condition
///   offset = cos(angular_step*(epsilon-1))
/// and the n = 1 consistency relation, by a scan + bisection root find in
/// epsilon over (0, total/2 + 2); norm follows from normalization. All roots
/// in the window are examined and the one maximizing the particle
/// entanglement is returned (ties resolved toward epsilon nearest 3/2).
AnsatzParams solve_ansatz_exact(int total, double tol = 1e-12);

/// Large-M limit (2/(M+1)) sin^2(pi (n+3/2)/(M+3)), renormalized to sum 1.
std::vector<double> ansatz_large_m(int total);

}  // namespace ssr
