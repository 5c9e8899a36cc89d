// spectra-bounds: evaluate scale-vector spectral-radius bounds on nonnegative
// matrices and the four graph matrices (adjacency, signless Laplacian,
// distance, distance signless Laplacian), compare them against the
// power-iteration oracle, and emit machine-readable tables.
//
// Subcommands:
//   bound   one row per (kind, alpha, i, side), formats table/csv/json
//   verify  randomized sandwich checking with a reproduction seed
//   sweep   per (kind, alpha): best upper gap and lower gap, CSV
//
// Exit codes: 0 success, 1 input error, 2 numeric failure.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "spectra_bounds/spectra_bounds.hpp"

namespace sb = spectra_bounds;

namespace {

struct Options {
    std::string input;
    std::string kind = "graph";       // matrix | graph
    std::string matrix = "all";       // adj | q | dist | dq | all
    std::string alphas = "0";
    std::string index_spec = "all";   // all | best | comma list of ranks
    std::string side = "both";        // upper | lower | both
    std::string format = "table";     // table | csv | json
    long long trials = 100;
    unsigned long long seed = 1;
    double tol = sb::default_tolerance;
};

struct ResultRow {
    std::string kind;
    std::optional<double> alpha;
    std::size_t index_i = 0;
    std::string side;
    double bound = 0.0;
    double rho = 0.0;
    double gap = 0.0;
    bool equality_holds = false;
    std::string branch;
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) parts.push_back(token);
    return parts;
}

std::vector<double> parse_alpha_list(const std::string& text) {
    std::vector<double> alphas;
    for (const auto& token : split_commas(text)) {
        try {
            std::size_t used = 0;
            const double a = std::stod(token, &used);
            if (used != token.size() || !std::isfinite(a)) throw std::invalid_argument(token);
            alphas.push_back(a);
        } catch (const std::exception&) {
            throw sb::error("invalid --alpha entry '" + token + "'");
        }
    }
    if (alphas.empty()) throw sb::error("--alpha needs at least one value");
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    return alphas;
}

// nullopt means "best"; an empty vector means "all".
std::optional<std::vector<std::size_t>> parse_index_spec(const std::string& text, std::size_t n) {
    if (text == "best") return std::nullopt;
    std::vector<std::size_t> indices;
    if (text == "all") {
        for (std::size_t i = 1; i <= n; ++i) indices.push_back(i);
        return indices;
    }
    for (const auto& token : split_commas(text)) {
        try {
            std::size_t used = 0;
            const long long i = std::stoll(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            if (i < 1 || i > static_cast<long long>(n))
                throw sb::error("--index entry " + token + " outside 1.." + std::to_string(n));
            indices.push_back(static_cast<std::size_t>(i));
        } catch (const sb::error&) {
            throw;
        } catch (const std::exception&) {
            throw sb::error("invalid --index entry '" + token + "'");
        }
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return indices;
}

std::vector<sb::GraphMatrixKind> parse_kind_selection(const std::string& text) {
    if (text == "all")
        return {sb::all_graph_matrix_kinds,
                sb::all_graph_matrix_kinds + std::size(sb::all_graph_matrix_kinds)};
    if (text == "adj") return {sb::GraphMatrixKind::adjacency};
    if (text == "q") return {sb::GraphMatrixKind::signless_laplacian};
    if (text == "dist") return {sb::GraphMatrixKind::distance};
    if (text == "dq") return {sb::GraphMatrixKind::distance_signless_laplacian};
    throw sb::error("invalid --matrix selection '" + text + "'");
}

std::size_t thread_cap(std::size_t task_count) {
    std::size_t cap = std::max<unsigned>(1, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SPECTRA_BOUNDS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) cap = static_cast<std::size_t>(v);
    }
    return std::min(cap, task_count);
}

// Index-parallel loop with deterministic result slots; first exception wins.
template <typename F>
void parallel_for(std::size_t count, F&& fn) {
    const std::size_t threads = thread_cap(count);
    if (threads <= 1) {
        for (std::size_t k = 0; k < count; ++k) fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
                try {
                    fn(k);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

std::string branch_label(const sb::EqualityDiagnosis& d) {
    switch (d.branch) {
        case sb::EqualityBranch::all_equal: return "all-equal";
        case sb::EqualityBranch::structured:
            return "structured(t=" + std::to_string(d.witness_t.value_or(0)) + ")";
        case sb::EqualityBranch::not_attained: return "not-attained";
    }
    return "unknown";
}

ResultRow make_row(const std::string& kind, std::optional<double> alpha,
                   const sb::BoundReport& report, double rho) {
    ResultRow row;
    row.kind = kind;
    row.alpha = alpha;
    row.index_i = report.index_i;
    row.side = report.side == sb::BoundSide::upper ? "upper" : "lower";
    row.bound = report.value;
    row.rho = rho;
    row.gap = report.value - rho;
    row.equality_holds = report.equality.holds;
    row.branch = branch_label(report.equality);
    return row;
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

constexpr int kMachineDigits = 12;
constexpr int kTableDigits = 6;

std::string csv_line(const ResultRow& r) {
    std::ostringstream out;
    out << r.kind << ',' << (r.alpha ? sb::format_significant(*r.alpha, kMachineDigits) : "")
        << ',' << r.index_i << ',' << r.side << ','
        << sb::format_significant(r.bound, kMachineDigits) << ','
        << sb::format_significant(r.rho, kMachineDigits) << ','
        << sb::format_significant(r.gap, kMachineDigits) << ','
        << (r.equality_holds ? "true" : "false") << ',' << r.branch;
    return out.str();
}

void emit_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
    out << "kind,alpha,i,side,bound,rho,gap,equality,branch\n";
    for (const auto& r : rows) out << csv_line(r) << '\n';
}

void emit_json(const std::vector<ResultRow>& rows, std::ostream& out) {
    out << "{\"rows\":[";
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& r = rows[k];
        if (k) out << ',';
        out << "{\"kind\":\"" << r.kind << "\",\"alpha\":"
            << (r.alpha ? sb::format_significant(*r.alpha, kMachineDigits) : "null")
            << ",\"i\":" << r.index_i << ",\"side\":\"" << r.side << "\",\"bound\":"
            << sb::format_significant(r.bound, kMachineDigits)
            << ",\"rho\":" << sb::format_significant(r.rho, kMachineDigits)
            << ",\"gap\":" << sb::format_significant(r.gap, kMachineDigits)
            << ",\"equality\":" << (r.equality_holds ? "true" : "false") << ",\"branch\":\""
            << r.branch << "\"}";
    }
    out << "]}\n";
}

void emit_table(const std::vector<ResultRow>& rows, std::ostream& out) {
    const std::vector<std::string> header = {"kind",  "alpha", "i",        "side",  "bound",
                                             "rho",   "gap",   "equality", "branch"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
        cells.push_back({r.kind, r.alpha ? sb::format_significant(*r.alpha, kTableDigits) : "-",
                         std::to_string(r.index_i), r.side,
                         sb::format_significant(r.bound, kTableDigits),
                         sb::format_significant(r.rho, kTableDigits),
                         sb::format_significant(r.gap, kTableDigits),
                         r.equality_holds ? "yes" : "no", r.branch});
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    const auto print = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "  " : "") << row[c] << std::string(width[c] - row[c].size(), ' ');
        out << '\n';
    };
    print(header);
    for (const auto& row : cells) print(row);
}

void emit(const std::vector<ResultRow>& rows, const std::string& format, std::ostream& out) {
    if (format == "csv")
        emit_csv(rows, out);
    else if (format == "json")
        emit_json(rows, out);
    else
        emit_table(rows, out);
}

// ---------------------------------------------------------------------------
// bound
// ---------------------------------------------------------------------------

std::vector<ResultRow> matrix_rows(const sb::NonnegativeMatrix& matrix, const Options& opts) {
    const auto m = sb::validate_irreducible(matrix);
    const auto oracle = sb::spectral_radius(m, opts.tol);
    const bool want_upper = opts.side != "lower";
    const bool want_lower = opts.side != "upper";

    std::vector<ResultRow> rows;
    if (want_upper) {
        const auto indices = parse_index_spec(opts.index_spec, m.size());
        if (!indices) {
            rows.push_back(make_row("matrix", std::nullopt,
                                    sb::best_upper_bound(m, sb::ScaleVector::uniform(m.size()),
                                                         oracle),
                                    oracle.rho));
        } else {
            for (std::size_t i : *indices)
                rows.push_back(
                    make_row("matrix", std::nullopt, sb::upper_bound_rowsum(m, i, oracle),
                             oracle.rho));
        }
    }
    if (want_lower)
        rows.push_back(
            make_row("matrix", std::nullopt, sb::lower_bound_rowsum(m, oracle), oracle.rho));
    return rows;
}

std::vector<ResultRow> graph_rows(const sb::Graph& g, const Options& opts) {
    const auto kinds = parse_kind_selection(opts.matrix);
    const auto alphas = parse_alpha_list(opts.alphas);
    const auto indices = parse_index_spec(opts.index_spec, g.size());
    const bool want_upper = opts.side != "lower";
    const bool want_lower = opts.side != "upper";

    // Oracles once per kind, then one task per (kind, alpha) block.
    std::vector<sb::SpectralEstimate> oracles(kinds.size());
    parallel_for(kinds.size(), [&](std::size_t k) {
        oracles[k] = sb::graph_spectral_radius(g, kinds[k], opts.tol);
    });

    std::vector<std::vector<ResultRow>> blocks(kinds.size() * alphas.size());
    parallel_for(blocks.size(), [&](std::size_t task) {
        const std::size_t k = task / alphas.size();
        const double alpha = alphas[task % alphas.size()];
        const auto& oracle = oracles[k];
        const std::string name{sb::kind_name(kinds[k])};
        auto& rows = blocks[task];
        if (want_upper) {
            if (!indices) {
                const auto profile = sb::scaled_profile(
                    sb::validate_irreducible(sb::graph_matrix(g, kinds[k])),
                    sb::graph_scale_vector(g, kinds[k], alpha));
                std::size_t best_i = 1;
                for (std::size_t i = 2; i <= g.size(); ++i)
                    if (sb::upper_bound_value(profile, i) < sb::upper_bound_value(profile, best_i))
                        best_i = i;
                rows.push_back(make_row(name, alpha,
                                        sb::graph_upper(g, kinds[k], alpha, best_i, oracle),
                                        oracle.rho));
            } else {
                for (std::size_t i : *indices)
                    rows.push_back(make_row(name, alpha,
                                            sb::graph_upper(g, kinds[k], alpha, i, oracle),
                                            oracle.rho));
            }
        }
        if (want_lower)
            rows.push_back(
                make_row(name, alpha, sb::graph_lower(g, kinds[k], alpha, oracle), oracle.rho));
    });

    std::vector<ResultRow> rows;
    for (const auto& block : blocks) rows.insert(rows.end(), block.begin(), block.end());
    return rows;
}

int run_bound(const Options& opts) {
    std::vector<ResultRow> rows;
    if (opts.kind == "matrix")
        rows = matrix_rows(sb::load_matrix(opts.input), opts);
    else if (opts.kind == "graph")
        rows = graph_rows(sb::load_graph(opts.input), opts);
    else
        throw sb::error("invalid --kind '" + opts.kind + "'");
    emit(rows, opts.format, std::cout);
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct TrialOutcome {
    std::size_t checks = 0;
    std::vector<std::string> violations;
};

int run_verify(const Options& opts) {
    if (opts.trials < 1) throw sb::error("--trials must be >= 1");
    const auto alphas = parse_alpha_list(opts.alphas);
    const auto kinds = parse_kind_selection(opts.matrix);
    const bool want_upper = opts.side != "lower";
    const bool want_lower = opts.side != "upper";
    const std::size_t trials = static_cast<std::size_t>(opts.trials);

    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(trials, [&](std::size_t trial) {
        std::mt19937_64 rng(opts.seed + 0x9E3779B97F4A7C15ULL * (trial + 1));
        auto& outcome = outcomes[trial];

        const auto record = [&](const std::string& kind, const std::string& alpha_label,
                                const sb::BoundReport& report, double rho) {
            const double slack = 1e-6 * (1.0 + rho);
            const bool ok = report.side == sb::BoundSide::upper ? report.value >= rho - slack
                                                                : report.value <= rho + slack;
            ++outcome.checks;
            if (ok) return;
            std::ostringstream line;
            line << "violation trial=" << trial << " kind=" << kind
                 << (alpha_label.empty() ? "" : " alpha=" + alpha_label) << " i=" << report.index_i
                 << " side=" << (report.side == sb::BoundSide::upper ? "upper" : "lower")
                 << " bound=" << sb::format_significant(report.value, kMachineDigits)
                 << " rho=" << sb::format_significant(rho, kMachineDigits)
                 << " seed=" << opts.seed;
            outcome.violations.push_back(line.str());
        };

        if (opts.kind == "matrix") {
            const auto m = sb::validate_irreducible(sb::random_positive_matrix(rng));
            const auto oracle = sb::spectral_radius(m, opts.tol);
            for (const auto& c :
                 {sb::random_scale_vector(rng, m.size()), sb::ScaleVector::uniform(m.size())}) {
                if (want_upper)
                    for (std::size_t i = 1; i <= m.size(); ++i)
                        record("matrix", "", sb::upper_bound(m, c, i, oracle), oracle.rho);
                if (want_lower) record("matrix", "", sb::lower_bound(m, c, oracle), oracle.rho);
            }
        } else if (opts.kind == "graph") {
            const auto g = sb::random_connected_graph(rng);
            for (const auto kind : kinds) {
                const auto oracle = sb::graph_spectral_radius(g, kind, opts.tol);
                const std::string name{sb::kind_name(kind)};
                for (const double alpha : alphas) {
                    const std::string alpha_label = sb::format_significant(alpha, kMachineDigits);
                    if (want_upper)
                        for (std::size_t i = 1; i <= g.size(); ++i)
                            record(name, alpha_label,
                                   sb::graph_upper(g, kind, alpha, i, oracle), oracle.rho);
                    if (want_lower)
                        record(name, alpha_label, sb::graph_lower(g, kind, alpha, oracle),
                               oracle.rho);
                }
            }
        } else {
            throw sb::error("invalid --kind '" + opts.kind + "'");
        }
    });

    std::size_t checks = 0, violations = 0;
    for (const auto& outcome : outcomes) {
        checks += outcome.checks;
        violations += outcome.violations.size();
        for (const auto& line : outcome.violations) std::cout << line << '\n';
    }
    std::cout << "verify: " << (violations == 0 ? "PASS" : "FAIL") << " trials=" << trials
              << " checks=" << checks << " violations=" << violations << " seed=" << opts.seed
              << '\n';
    return violations == 0 ? 0 : 2;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

int run_sweep(const Options& opts) {
    if (opts.kind != "graph") throw sb::error("sweep expects --kind graph");
    const auto g = sb::load_graph(opts.input);
    const auto kinds = parse_kind_selection(opts.matrix);
    const auto alphas = parse_alpha_list(opts.alphas);

    std::vector<sb::SpectralEstimate> oracles(kinds.size());
    parallel_for(kinds.size(), [&](std::size_t k) {
        oracles[k] = sb::graph_spectral_radius(g, kinds[k], opts.tol);
    });

    std::cout << "kind,alpha,best_i,upper,lower,rho,upper_gap,lower_gap\n";
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        for (const double alpha : alphas) {
            const auto profile =
                sb::scaled_profile(sb::validate_irreducible(sb::graph_matrix(g, kinds[k])),
                                   sb::graph_scale_vector(g, kinds[k], alpha));
            std::size_t best_i = 1;
            double best = sb::upper_bound_value(profile, 1);
            for (std::size_t i = 2; i <= g.size(); ++i) {
                const double v = sb::upper_bound_value(profile, i);
                if (v < best) {
                    best = v;
                    best_i = i;
                }
            }
            const double lower = sb::graph_lower(g, kinds[k], alpha, oracles[k]).value;
            const double rho = oracles[k].rho;
            std::cout << sb::kind_name(kinds[k]) << ','
                      << sb::format_significant(alpha, kMachineDigits) << ',' << best_i << ','
                      << sb::format_significant(best, kMachineDigits) << ','
                      << sb::format_significant(lower, kMachineDigits) << ','
                      << sb::format_significant(rho, kMachineDigits) << ','
                      << sb::format_significant(best - rho, kMachineDigits) << ','
                      << sb::format_significant(lower - rho, kMachineDigits) << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opts;
    CLI::App app{"scale-vector spectral-radius bounds for nonnegative matrices and graphs"};
    app.require_subcommand(1);

    const auto add_shared = [&](CLI::App* cmd, bool needs_input) {
        auto* input = cmd->add_option("--input", opts.input, "matrix or edge-list file");
        if (needs_input) input->required();
        cmd->add_option("--kind", opts.kind, "input kind: matrix|graph")
            ->check(CLI::IsMember({"matrix", "graph"}));
        cmd->add_option("--matrix", opts.matrix, "graph matrix selection: adj|q|dist|dq|all")
            ->check(CLI::IsMember({"adj", "q", "dist", "dq", "all"}));
        cmd->add_option("--alpha", opts.alphas, "comma-separated exponent list");
        cmd->add_option("--side", opts.side, "upper|lower|both")
            ->check(CLI::IsMember({"upper", "lower", "both"}));
        cmd->add_option("--tol", opts.tol, "oracle tolerance")
            ->check(CLI::PositiveNumber);
    };

    auto* bound = app.add_subcommand("bound", "evaluate bounds on one input");
    add_shared(bound, true);
    bound->add_option("--index", opts.index_spec, "rank indices: all|best|comma list");
    bound->add_option("--format", opts.format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    auto* verify = app.add_subcommand("verify", "randomized bound checking");
    add_shared(verify, false);
    verify->add_option("--trials", opts.trials, "number of random instances");
    verify->add_option("--seed", opts.seed, "master seed");

    auto* sweep = app.add_subcommand("sweep", "CSV of bound gaps per exponent");
    add_shared(sweep, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (bound->parsed()) return run_bound(opts);
        if (verify->parsed()) return run_verify(opts);
        if (sweep->parsed()) return run_sweep(opts);
        return 1;
    } catch (const sb::no_convergence_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
