#include "ssr/cli.hpp"

#include "ssr/beta_polynomials.hpp"
#include "ssr/errors.hpp"
#include "ssr/fock.hpp"
#include "ssr/general_optimal.hpp"
#include "ssr/phase.hpp"
#include "ssr/reference_states.hpp"
#include "ssr/single_optimal.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ssr::cli {

namespace {

using Cell = std::variant<std::int64_t, double, std::string>;

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

std::string cell_text(const Cell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
    return std::get<std::string>(cell);
}

struct OutputTable {
    std::vector<std::pair<std::string, Cell>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void meta(std::string key, Cell value) { metadata.emplace_back(std::move(key), std::move(value)); }
};

void write_csv(const OutputTable& table, std::ostream& os) {
    for (const auto& [key, value] : table.metadata) {
        os << "# " << key << "=" << cell_text(value) << "\n";
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << table.columns[i];
    }
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << cell_text(row[i]);
        }
        os << "\n";
    }
}

void write_json(const OutputTable& table, std::ostream& os) {
    nlohmann::ordered_json doc;
    auto& meta = doc["metadata"];
    for (const auto& [key, value] : table.metadata) {
        std::visit([&](const auto& v) { meta[key] = v; }, value);
    }
    doc["columns"] = table.columns;
    auto& rows = doc["rows"];
    rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            std::visit([&](const auto& v) { jrow.push_back(v); }, cell);
        }
        rows.push_back(std::move(jrow));
    }
    os << doc.dump(2) << "\n";
}

const char* command_name(Command c) {
    switch (c) {
        case Command::OptimizeSingle: return "optimize-single";
        case Command::OptimizeShared: return "optimize-shared";
        case Command::Ansatz: return "ansatz";
        case Command::Compare: return "compare";
        case Command::Phase: return "phase";
        case Command::Sweep: return "sweep";
        case Command::Polys: return "polys";
    }
    return "?";
}

const char* assignment_name(PhaseAssignment a) {
    switch (a) {
        case PhaseAssignment::Zero: return "zero";
        case PhaseAssignment::Linear: return "linear";
        case PhaseAssignment::Random: return "random";
        case PhaseAssignment::Kerr: return "kerr";
    }
    return "?";
}

void common_metadata(const RunConfig& config, OutputTable& table) {
    table.meta("tool", std::string("ssrent ") + kToolVersion);
    table.meta("command", std::string(command_name(config.command)));
    table.meta("format", std::string(config.format == OutputFormat::Csv ? "csv" : "json"));
    table.meta("M", static_cast<std::int64_t>(config.total));
    table.meta("tol", config.tol);
}

OutputTable build_optimize_single(const RunConfig& config) {
    const auto solution = solve_recurrence(config.total, config.tol);
    const double ep = particle_entanglement_single(TwoModeState::from_probabilities(solution.probs));
    OutputTable table;
    common_metadata(config, table);
    table.meta("beta", solution.beta);
    table.meta("boundary_residual", solution.boundary_residual);
    table.meta("particle_entanglement", ep);
    table.columns = {"n", "prob"};
    for (int n = 0; n <= solution.total; ++n) {
        table.rows.push_back({static_cast<std::int64_t>(n), solution.probs[static_cast<std::size_t>(n)]});
    }
    return table;
}

OutputTable build_optimize_shared(const RunConfig& config) {
    if (config.system_total >= 0 && config.system_total != config.total) {
        throw std::invalid_argument("optimize-shared solves the N = M case; --N must equal --M");
    }
    const auto solution = solve_shared_phase(config.total, config.tol);
    const auto fit = fit_trial_state(config.total, solution.probs);
    const auto uniform_system = shared_phase_state(config.total);
    const double ep =
        particle_entanglement(uniform_system, TwoModeState::from_probabilities(solution.probs));
    OutputTable table;
    common_metadata(config, table);
    table.meta("N", static_cast<std::int64_t>(config.total));
    table.meta("shots", static_cast<std::int64_t>(solution.shots));
    table.meta("stationarity_spread", solution.max_stationarity_residual);
    table.meta("fit_offset", fit.offset);
    table.meta("fit_epsilon", fit.epsilon);
    table.meta("fit_overlap", fit.overlap);
    table.meta("particle_entanglement", ep);
    table.columns = {"n", "prob"};
    for (int n = 0; n <= solution.total; ++n) {
        table.rows.push_back({static_cast<std::int64_t>(n), solution.probs[static_cast<std::size_t>(n)]});
    }
    return table;
}

OutputTable build_ansatz(const RunConfig& config) {
    const auto params = solve_ansatz_exact(config.total, config.tol);
    const auto exact = ansatz_coefficients(params);
    const auto large = ansatz_large_m(config.total);
    OutputTable table;
    common_metadata(config, table);
    table.meta("offset", params.offset);
    table.meta("norm", params.norm);
    table.meta("epsilon", params.epsilon);
    table.meta("angular_step", params.angular_step);
    table.meta("beta", params.beta);
    table.columns = {"n", "exact_prob", "large_m_prob"};
    for (int n = 0; n <= config.total; ++n) {
        table.rows.push_back({static_cast<std::int64_t>(n), exact[static_cast<std::size_t>(n)],
                              large[static_cast<std::size_t>(n)]});
    }
    return table;
}

OutputTable build_compare(const RunConfig& config) {
    int begin = config.total, end = config.total;
    if (config.sweep_begin >= 0) {
        begin = config.sweep_begin;
        end = config.sweep_end;
    }
    if (begin < 1 || end < begin) {
        throw std::invalid_argument("compare: need 1 <= first M <= last M");
    }
    OutputTable table;
    common_metadata(config, table);
    table.meta("family", config.family.empty() ? std::string("all") : config.family);
    if (config.sweep_begin >= 0) {
        table.meta("sweep_range", std::to_string(begin) + ":" + std::to_string(end));
    }
    table.columns = {"label", "M", "particle_entanglement", "merit"};
    bool family_seen = config.family.empty();
    for (int m = begin; m <= end; ++m) {
        const auto report = compare_references(m);
        for (const auto& entry : report.entries) {
            if (!config.family.empty() && entry.label != config.family) continue;
            family_seen = true;
            table.rows.push_back({entry.label, static_cast<std::int64_t>(m), entry.particle_ent,
                                  entry.merit});
        }
    }
    if (!family_seen) {
        throw std::invalid_argument("compare: unknown family '" + config.family + "'");
    }
    return table;
}

TwoModeState phased_uniform_state(int m_total, const RunConfig& config, double* vartheta_out) {
    std::vector<double> thetas(static_cast<std::size_t>(m_total) + 1, 0.0);
    switch (config.phases) {
        case PhaseAssignment::Zero:
            break;
        case PhaseAssignment::Linear:
            for (int n = 0; n <= m_total; ++n) thetas[static_cast<std::size_t>(n)] = std::numbers::pi * n;
            break;
        case PhaseAssignment::Random: {
            std::mt19937_64 engine(config.seed);
            for (auto& t : thetas) {
                t = 2.0 * std::numbers::pi * (static_cast<double>(engine() >> 11) * 0x1.0p-53);
            }
            break;
        }
        case PhaseAssignment::Kerr: {
            *vartheta_out = std::numbers::pi / 2.0;
            return apply_kerr(shared_phase_state(m_total), *vartheta_out);
        }
    }
    std::vector<std::complex<double>> amps(static_cast<std::size_t>(m_total) + 1);
    const double mod = 1.0 / std::sqrt(m_total + 1.0);
    for (std::size_t n = 0; n < amps.size(); ++n) amps[n] = std::polar(mod, thetas[n]);
    return TwoModeState(std::move(amps));
}

OutputTable build_phase(const RunConfig& config) {
    const int m_total = config.total;
    const int points = config.points > 0 ? config.points : 4 * (m_total + 1);
    double vartheta = 0.0;
    const TwoModeState state = phased_uniform_state(m_total, config, &vartheta);
    const auto density = phase_difference_density(state, points);
    const double ep = particle_entanglement_single(state);

    OutputTable table;
    common_metadata(config, table);
    table.meta("phases", std::string(assignment_name(config.phases)));
    table.meta("points", static_cast<std::int64_t>(points));
    if (config.phases == PhaseAssignment::Random) {
        table.meta("generator", std::string("mt19937_64"));
        table.meta("seed", static_cast<std::int64_t>(config.seed));
    }
    if (config.phases == PhaseAssignment::Kerr) table.meta("vartheta", vartheta);
    table.meta("particle_entanglement", ep);
    table.columns = {"delta", "density"};
    for (std::size_t j = 0; j < density.grid.size(); ++j) {
        table.rows.push_back({density.grid[j], density.density[j]});
    }
    return table;
}

OutputTable build_sweep(const RunConfig& config) {
    int begin = 1, end = config.total;
    if (config.sweep_begin >= 0) {
        begin = config.sweep_begin;
        end = config.sweep_end;
    }
    if (begin < 1 || end < begin) {
        throw std::invalid_argument("sweep: need 1 <= first M <= last M");
    }
    OutputTable table;
    common_metadata(config, table);
    table.meta("sweep_range", std::to_string(begin) + ":" + std::to_string(end));
    table.columns = {"M", "beta", "particle_entanglement"};
    for (int m = begin; m <= end; ++m) {
        const auto solution = solve_recurrence(m, config.tol);
        const double ep =
            particle_entanglement_single(TwoModeState::from_probabilities(solution.probs));
        table.rows.push_back({static_cast<std::int64_t>(m), solution.beta, ep});
    }
    return table;
}

OutputTable build_polys(const RunConfig& config) {
    if (config.total < 1) throw std::invalid_argument("polys: need M >= 1");
    const auto table_p = polynomial_table(config.total);
    const auto solution = solve_recurrence(config.total, config.tol);
    double sum_at_beta = 0.0;
    for (const auto& poly : table_p.polys) sum_at_beta += evaluate(poly, solution.beta);
    const double p_m_at_beta = evaluate(table_p.polys.back(), solution.beta);
    OutputTable table;
    common_metadata(config, table);
    table.meta("beta", solution.beta);
    table.meta("p_m_at_beta", p_m_at_beta);
    table.meta("sum_p_at_beta", sum_at_beta);
    table.meta("inv_c0_sq", 1.0 / solution.probs.front());
    table.columns = {"n", "k", "coeff"};
    for (int n = 0; n <= table_p.total; ++n) {
        const auto& coeffs = table_p.polys[static_cast<std::size_t>(n)].coeffs;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            table.rows.push_back({static_cast<std::int64_t>(n), static_cast<std::int64_t>(k),
                                  coeffs[k].str()});
        }
    }
    return table;
}

}  // namespace

void run(const RunConfig& config) {
    if (config.output_path.empty()) throw std::invalid_argument("missing output path (--out)");
    if (config.total < 0) throw std::invalid_argument("--M must be >= 0");
    if (!(config.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
    if (config.command == Command::Phase && config.points > 0 &&
        config.points < 4 * (config.total + 1)) {
        throw std::invalid_argument("--points must be at least 4*(M+1)");
    }

    OutputTable table;
    switch (config.command) {
        case Command::OptimizeSingle: table = build_optimize_single(config); break;
        case Command::OptimizeShared: table = build_optimize_shared(config); break;
        case Command::Ansatz: table = build_ansatz(config); break;
        case Command::Compare: table = build_compare(config); break;
        case Command::Phase: table = build_phase(config); break;
        case Command::Sweep: table = build_sweep(config); break;
        case Command::Polys: table = build_polys(config); break;
    }

    std::ofstream os(config.output_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + config.output_path);
    if (config.format == OutputFormat::Csv) {
        write_csv(table, os);
    } else {
        write_json(table, os);
    }
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + config.output_path);
}

}  // namespace ssr::cli
