// Command-line surface for the triangular-grid reduction engine: builds
// and reduces labeled grids, runs the verification harness, certifies the
// reduction against the Laplacian oracle, and emits asymptotics tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "trigrid/analysis.hpp"
#include "trigrid/grid_json.hpp"
#include "trigrid/oracle.hpp"
#include "trigrid/reduction.hpp"
#include "trigrid/structure.hpp"

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

int work_budget() {
    if (const char* env = std::getenv("TRIGRID_WORK_BUDGET")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid TRIGRID_WORK_BUDGET value\n";
    }
    return 20;
}

struct Range {
    int lo = 0;
    int hi = 0;
};

/// Accepts "7" or "4..10".
Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected an integer or A..B range, got \"" + text + "\"");
    }
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + out_path + " for writing");
    file << content;
}

void require_budget(int n, const char* what) {
    const int budget = work_budget();
    if (n > budget)
        throw CLI::ValidationError(std::string(what) + " " + std::to_string(n) +
                                   " exceeds the work budget of " + std::to_string(budget) +
                                   " (override with TRIGRID_WORK_BUDGET)");
}

std::string replace_extension(const std::string& path, const std::string& suffix) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + suffix;
    return path.substr(0, dot) + suffix;
}

int run_reduce(int n, int steps, const std::string& label_text, const std::string& out_path,
               bool emit_intermediates) {
    require_budget(n, "--n");
    trigrid::Rational label;
    try {
        label = trigrid::Rational::parse(label_text);
    } catch (const std::invalid_argument& ex) {
        throw CLI::ValidationError(ex.what());
    }
    if (steps < 0 || steps > n - 1)
        throw CLI::ValidationError("--steps must lie in 0.." + std::to_string(n - 1));
    if (emit_intermediates && out_path.empty())
        throw CLI::ValidationError("--emit-intermediates requires --out");
    if (!label.is_positive()) throw CLI::ValidationError("--label must be strictly positive");

    trigrid::Grid g = trigrid::make_uniform_grid(n, label);
    std::vector<trigrid::CornerTails> tails;
    for (int step = 0; step < steps; ++step) {
        if (emit_intermediates)
            write_output(trigrid::serialize(g),
                         replace_extension(out_path, ".step" + std::to_string(step) + ".json"));
        trigrid::ReductionStep result = trigrid::reduce_once(g);
        tails.push_back(std::move(result.tails));
        g = std::move(result.child);
    }
    write_output(trigrid::serialize(g), out_path);
    if (emit_intermediates) {
        nlohmann::ordered_json jt = nlohmann::ordered_json::array();
        for (size_t i = 0; i < tails.size(); ++i) {
            jt.push_back({{"step", i + 1},
                          {"top", tails[i].top.to_string()},
                          {"bottom_left", tails[i].bottom_left.to_string()},
                          {"bottom_right", tails[i].bottom_right.to_string()}});
        }
        nlohmann::ordered_json sidecar{{"tails", std::move(jt)}};
        write_output(sidecar.dump(2) + "\n", replace_extension(out_path, ".tails.json"));
    }
    return 0;
}

int emit_check_rows(const std::vector<trigrid::CheckRow>& rows, const std::string& format,
                    const std::string& out_path) {
    write_output(format == "json" ? trigrid::check_rows_json(rows) : trigrid::check_rows_csv(rows),
                 out_path);
    if (!trigrid::theorem_backed_pass(rows)) {
        for (const trigrid::CheckRow& r : rows)
            if (r.theorem_backed && !r.pass)
                std::cerr << "FAIL " << r.check << " n=" << r.n << " s=" << r.s << " part=" << r.part
                          << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        return kExitCheckFailure;
    }
    return 0;
}

int run_oracle_check(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        const trigrid::Rational reduced = trigrid::corner_resistance(n);
        const auto corners = trigrid::corner_vertices(n);
        const trigrid::Rational ground_truth = trigrid::effective_resistance(
            trigrid::to_weighted_graph(trigrid::make_uniform_grid(n, trigrid::Rational(1))),
            corners[0], corners[1]);
        if (reduced != ground_truth) {
            std::cerr << "MISMATCH at n=" << n << ": reduction gives " << reduced.to_string()
                      << " but the Laplacian oracle gives " << ground_truth.to_string() << "\n";
            return kExitCheckFailure;
        }
        std::cout << "n=" << n << ": corner resistance " << reduced.to_string()
                  << " confirmed by oracle\n";
    }
    return 0;
}

int run_export(const std::string& grid_path, const std::string& format,
               const std::string& out_path) {
    std::ifstream in(grid_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + grid_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const trigrid::Grid g = trigrid::deserialize(buffer.str());
    const trigrid::WeightedGraph wg = trigrid::to_weighted_graph(g);
    if (format == "json") {
        nlohmann::ordered_json jv = nlohmann::ordered_json::array();
        for (const trigrid::Vertex v : wg.vertices()) jv.push_back({v.x, v.y});
        nlohmann::ordered_json je = nlohmann::ordered_json::array();
        for (const auto& [key, c] : wg.edges()) {
            je.push_back({{"u", {key.first.x, key.first.y}},
                          {"v", {key.second.x, key.second.y}},
                          {"conductance", c.to_string()}});
        }
        nlohmann::ordered_json out{{"vertices", std::move(jv)}, {"edges", std::move(je)}};
        write_output(out.dump(2) + "\n", out_path);
    } else {
        std::ostringstream out;
        out << "x1,y1,x2,y2,conductance,resistance\n";
        for (const auto& [key, c] : wg.edges()) {
            out << key.first.x << ',' << key.first.y << ',' << key.second.x << ',' << key.second.y
                << ',' << c.to_string() << ',' << (trigrid::Rational(1) / c).to_string() << '\n';
        }
        write_output(out.str(), out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact reduction engine and verification harness for triangular resistor grids"};
    app.require_subcommand(1);

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Reduce a uniform grid and write it as JSON");
    int reduce_n = 0;
    int reduce_steps = 0;
    std::string reduce_label = "1/1";
    std::string reduce_out;
    bool emit_intermediates = false;
    reduce->add_option("--n", reduce_n, "Row count of the starting grid")->required();
    reduce->add_option("--steps", reduce_steps, "Number of row reductions to apply");
    reduce->add_option("--label", reduce_label, "Uniform edge resistance as p/q (default 1/1)");
    reduce->add_option("--out", reduce_out, "Output path (default: stdout)");
    reduce->add_flag("--emit-intermediates", emit_intermediates,
                     "Also write every intermediate grid and a tails sidecar");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a harness check and emit its report");
    verify->require_subcommand(1);
    std::string format = "csv";
    std::string verify_out;
    std::string n_range_text;
    int opt_s = 1;
    int s_max = 64;
    for (const char* name : {"vanishing-ones", "uniform-center", "sequences", "corollary-6-3", "gcd"}) {
        auto* sub = verify->add_subcommand(name);
        sub->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", verify_out, "Output path (default: stdout)");
        if (std::string(name) == "vanishing-ones" || std::string(name) == "uniform-center")
            sub->add_option("--n", n_range_text, "Row count or range A..B");
        if (std::string(name) == "uniform-center")
            sub->add_option("--s", opt_s, "Reduction depth (default 1)");
        if (std::string(name) == "sequences" || std::string(name) == "corollary-6-3" ||
            std::string(name) == "gcd")
            sub->add_option("--s-max", s_max, "Largest index to compute (default 64)");
    }

    // oracle-check
    auto* oracle = app.add_subcommand(
        "oracle-check", "Certify corner resistance against the exact Laplacian oracle");
    int oracle_n_max = 8;
    oracle->add_option("--n-max", oracle_n_max, "Largest grid to certify (default 8)");

    // asymptotics
    auto* asym = app.add_subcommand("asymptotics", "Tabulate desk-scale trend quantities");
    int asym_n_max = 14;
    std::string asym_format = "csv";
    std::string asym_out;
    asym->add_option("--n-max", asym_n_max, "Largest row count (default 14)")
        ->check(CLI::Range(3, 1 << 20));
    asym->add_option("--format", asym_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    asym->add_option("--out", asym_out, "Output path (default: stdout)");

    // export
    auto* exp = app.add_subcommand("export", "Convert a grid JSON file to a weighted-graph edge list");
    std::string export_grid;
    std::string export_format = "csv";
    std::string export_out;
    exp->add_option("--grid", export_grid, "Grid JSON path")->required();
    exp->add_option("--format", export_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    exp->add_option("--out", export_out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);

        if (reduce->parsed())
            return run_reduce(reduce_n, reduce_steps, reduce_label, reduce_out, emit_intermediates);

        if (verify->parsed()) {
            CLI::App* which = verify->get_subcommands().front();
            const std::string name = which->get_name();
            if (name == "vanishing-ones") {
                const Range range = n_range_text.empty() ? Range{2, 14} : parse_range(n_range_text);
                if (range.lo < 1) throw CLI::ValidationError("--n must start at 1 or above");
                require_budget(range.hi, "--n");
                std::vector<trigrid::CheckRow> rows;
                for (int n = range.lo; n <= range.hi; ++n)
                    for (trigrid::CheckRow& row : trigrid::check_vanishing_ones(n))
                        rows.push_back(std::move(row));
                return emit_check_rows(rows, format, verify_out);
            }
            if (name == "uniform-center") {
                if (opt_s < 1) throw CLI::ValidationError("--s must be >= 1");
                const Range range =
                    n_range_text.empty() ? Range{4 * opt_s, 4 * opt_s + 6} : parse_range(n_range_text);
                require_budget(range.hi, "--n");
                if (range.lo < 4 * opt_s)
                    throw CLI::ValidationError("uniform-center requires n >= 4s");
                std::vector<trigrid::CheckRow> rows;
                for (int n = range.lo; n <= range.hi; ++n)
                    for (trigrid::CheckRow& row : trigrid::check_uniform_center(n, opt_s))
                        rows.push_back(std::move(row));
                return emit_check_rows(rows, format, verify_out);
            }
            if (name == "sequences") {
                const trigrid::BoundarySequences seq = trigrid::boundary_sequences(s_max);
                const std::vector<trigrid::CheckRow> rows = trigrid::check_sequences(s_max);
                write_output(trigrid::sequences_csv(seq), verify_out);
                if (!trigrid::theorem_backed_pass(rows)) {
                    std::cerr << trigrid::check_rows_csv(rows);
                    return kExitCheckFailure;
                }
                return 0;
            }
            if (name == "corollary-6-3") {
                const trigrid::BoundarySequences seq = trigrid::boundary_sequences(std::max(s_max, 2));
                const auto table = trigrid::check_printed_base_formula(seq);
                write_output(trigrid::base_formula_csv(table), verify_out);
                const auto rows = trigrid::base_formula_rows(table);
                if (!trigrid::theorem_backed_pass(rows)) {
                    std::cerr << trigrid::check_rows_csv(rows);
                    return kExitCheckFailure;
                }
                return 0;
            }
            // gcd: report-only by design, always exit 0.
            const trigrid::BoundarySequences seq = trigrid::boundary_sequences(std::max(s_max, 2));
            write_output(trigrid::gcd_csv(trigrid::gcd_scan(seq)), verify_out);
            return 0;
        }

        if (oracle->parsed()) return run_oracle_check(oracle_n_max);

        if (asym->parsed()) {
            require_budget(asym_n_max, "--n-max");
            const auto rows = trigrid::asymptotics_report(asym_n_max);
            write_output(asym_format == "json" ? trigrid::asymptotics_json(rows)
                                               : trigrid::asymptotics_csv(rows),
                         asym_out);
            return 0;
        }

        if (exp->parsed()) return run_export(export_grid, export_format, export_out);

        std::cerr << app.help();
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
