#pragma once

#include <cstdint>
#include <string>

namespace ssr::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Command {
    OptimizeSingle,  ///< optimal reference for a single shared particle
    OptimizeShared,  ///< optimal reference for the N = M shared-phase system
    Ansatz,          ///< exact and large-M closed forms side by side
    Compare,         ///< figure-of-merit table across reference families
    Phase,           ///< phase-difference density for a chosen phase assignment
    Sweep,           ///< optimal-reference entanglement across a range of M
    Polys,           ///< stationarity polynomial table and beta-root check
};

enum class OutputFormat { Csv, Json };

enum class PhaseAssignment { Zero, Linear, Random, Kerr };

struct RunConfig {
    Command command = Command::OptimizeSingle;
    int total = 29;          ///< --M
    int system_total = -1;   ///< --N; only optimize-shared accepts it (must equal --M)
    double tol = 1e-12;
    int points = 0;          ///< --points; 0 selects 4*(M+1)
    std::string output_path; ///< --out, required
    OutputFormat format = OutputFormat::Csv;
    std::uint64_t seed = 0;  ///< --seed, used by the random phase assignment
    std::string family;      ///< --family, restricts compare to one family
    PhaseAssignment phases = PhaseAssignment::Zero;
    int sweep_begin = -1;    ///< --sweep-range A:B (compare and sweep)
    int sweep_end = -1;
};

/// Execute one command and write its output file. Output is deterministic for
/// a fixed config: doubles at 17 significant digits, '.' decimal separator,
/// '\n' line endings. Throws std::invalid_argument for unusable configs,
/// ssr::no_root_error when a solver bracket fails, std::runtime_error on I/O
/// failure.
void run(const RunConfig& config);

}  // namespace ssr::cli
