// madcolor: exact maximum average degree, (1,...,1,0,...,0)-coloring,
// and discharging audits for simple graphs.
//
// Exit codes: 0 = success / decided, 1 = usage or I/O error,
// 2 = timeout, failed verification, or a failed audit/hunt check.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "madcolor/json_io.hpp"
#include "madcolor/madcolor.hpp"

namespace {

using namespace madcolor;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kUndecided = 2;

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Format is decided by --format when given, otherwise by extension
// (.g6 -> graph6), defaulting to the edge-list format.
Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_text(path);
    bool graph6 = format == "g6" || (format.empty() && ends_with(path, ".g6"));
    if (graph6) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) return from_graph6(line);
        throw GraphFormatError(GraphFormatError::Kind::truncated, "graph6: empty file");
    }
    return from_edge_list(text);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct GraphArgs {
    std::string path;
    std::string format;

    void attach(CLI::App* cmd) {
        cmd->add_option("--graph", path, "graph file, '-' for stdin")->required();
        cmd->add_option("--format", format, "force input format")
            ->check(CLI::IsMember({"edges", "g6"}));
    }
    Graph load() const { return load_graph(path, format); }
};

int run_gen(const std::string& kind, int n, long long m, int a, int b,
            std::uint64_t seed, const std::string& out, const std::string& format) {
    Graph g;
    if (kind == "below-bound") {
        g = gen_below_bound(a, b, n, seed);
    } else if (kind == "gnm") {
        g = gen(kind, {n, m}, seed);
    } else {
        g = gen(kind, {n}, seed);
    }
    bool graph6 = format == "g6" || (format.empty() && ends_with(out, ".g6"));
    write_text(out, graph6 ? to_graph6(g) + "\n" : to_edge_list(g));
    return kOk;
}

int run_mad(const GraphArgs& graph_args, bool as_json, const std::string& out) {
    Graph g = graph_args.load();
    Rational value = mad(g);
    if (!as_json) {
        write_text(out, value.str() + "\n");
        return kOk;
    }
    json j{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"mad", to_json(value)}};
    j["densest"] = g.edge_count() == 0 ? json(nullptr) : densest_to_json(densest_subgraph(g));
    write_text(out, dump(j));
    return kOk;
}

int run_color(const GraphArgs& graph_args, int a, int b, const std::string& method,
              long long budget, long long swap_cap, std::uint64_t seed, bool as_json,
              const std::string& out) {
    Graph g = graph_args.load();
    ColorSpec spec{a, b};

    SolveStatus status;
    Coloring coloring;
    bool fell_back = false;
    long long swaps = 0, nodes = 0;
    if (method == "exact") {
        SolveResult r = solve_exact(g, spec, budget);
        status = r.status;
        coloring = r.coloring;
        nodes = r.nodes;
    } else {  // proof | auto: both run the proof-guided solver with fallback
        ProofGuidedResult r = solve_proof_guided(g, spec, swap_cap, seed, budget);
        status = r.status;
        coloring = r.coloring;
        fell_back = r.fell_back;
        swaps = r.swaps;
        nodes = r.exact_nodes;
    }

    std::string verdict = status == SolveStatus::colored  ? "SAT"
                          : status == SolveStatus::unsat ? "UNSAT"
                                                         : "TIMEOUT";
    if (as_json) {
        json j{{"status", verdict},
               {"method", method},
               {"nodes", nodes},
               {"fell_back", fell_back},
               {"swaps", swaps}};
        j["coloring"] = status == SolveStatus::colored ? coloring_to_json(spec, coloring)
                                                       : json(nullptr);
        write_text(out, dump(j));
    } else {
        std::string text = verdict + "\n";
        if (status == SolveStatus::colored) {
            for (int code = 0; code < spec.total(); ++code) {
                text += class_label(spec, code) + ":";
                for (int v = 0; v < coloring.size(); ++v)
                    if (coloring.code(v) == code) text += " " + std::to_string(v);
                text += "\n";
            }
        }
        write_text(out, text);
    }
    return status == SolveStatus::timeout ? kUndecided : kOk;
}

int run_verify(const GraphArgs& graph_args, const std::string& coloring_path,
               int defect, bool as_json, const std::string& out) {
    Graph g = graph_args.load();
    json j = json::parse(read_text(coloring_path));
    auto [spec, coloring] = coloring_from_json(j, g.vertex_count());
    VerifyResult result = verify(g, spec, coloring, defect);
    if (as_json) {
        write_text(out, dump(verify_to_json(spec, result)));
    } else {
        std::string text = result.ok ? "OK\n" : "INVALID\n";
        for (const Violation& v : result.violations) {
            text += "  vertex " + std::to_string(v.vertex);
            switch (v.reason) {
                case Violation::Reason::unassigned:
                    text += ": unassigned";
                    break;
                case Violation::Reason::independence:
                    text += " (" + class_label(spec, v.code) + "): class not independent,";
                    break;
                case Violation::Reason::defect_exceeded:
                    text += " (" + class_label(spec, v.code) + "): defect exceeded,";
                    break;
            }
            if (!v.conflicting.empty()) {
                text += " conflicts:";
                for (int u : v.conflicting) text += " " + std::to_string(u);
            }
            text += "\n";
        }
        write_text(out, text);
    }
    return result.ok ? kOk : kUndecided;
}

int run_audit(const GraphArgs& graph_args, int a, int b, bool as_json,
              const std::string& out) {
    Graph g = graph_args.load();
    AuditResult result = audit(g, ColorSpec{a, b});
    if (as_json) {
        write_text(out, dump(audit_to_json(result)));
    } else {
        std::string text;
        text += std::string("covered: ") + (result.layers.covered ? "true" : "false") + "\n";
        text += "sum_mu: " + result.charges.sum_mu.str() + "\n";
        text += "sum_mu_star: " + result.charges.sum_mu_star.str() + "\n";
        for (const AuditCheck& check : result.checks) {
            text += std::string(check.pass ? "PASS" : "FAIL") + " " + check.name;
            if (!check.witness.empty()) text += " (" + check.witness + ")";
            text += "\n";
        }
        write_text(out, text);
    }
    if (!result.all_pass)
        std::cerr << "audit: a check failed; this falsifies the implementation "
                     "or the argument it mechanizes\n";
    return result.all_pass ? kOk : kUndecided;
}

int run_lemma2(const GraphArgs& graph_args, int a, int b, int vertex,
               const std::string& coloring_path, long long budget, bool as_json,
               const std::string& out) {
    Graph g = graph_args.load();
    ColorSpec spec{a, b};

    std::vector<int> targets;
    if (vertex >= 0)
        targets.push_back(vertex);
    else
        for (int v = 0; v < g.vertex_count(); ++v) targets.push_back(v);

    json items = json::array();
    std::string text;
    bool any_violation = false;
    for (int v : targets) {
        Coloring c(g.vertex_count());
        if (!coloring_path.empty()) {
            auto [file_spec, file_coloring] =
                coloring_from_json(json::parse(read_text(coloring_path)), g.vertex_count());
            if (file_spec.defective != a || file_spec.independent != b)
                throw std::runtime_error("lemma2: coloring file spec does not match --a/--b");
            c = file_coloring;
        } else {
            // Color g - v from scratch with the exact solver.
            std::vector<int> keep;
            for (int u = 0; u < g.vertex_count(); ++u)
                if (u != v) keep.push_back(u);
            auto [sub, to_old] = g.induced(keep);
            SolveResult solved = solve_exact(sub, spec, budget);
            if (solved.status == SolveStatus::timeout) return kUndecided;
            if (solved.status == SolveStatus::unsat) {
                if (as_json)
                    items.push_back({{"vertex", v}, {"skipped", "g - v is uncolorable"}});
                else
                    text += "vertex " + std::to_string(v) + ": skipped (g - v uncolorable)\n";
                continue;
            }
            for (int i = 0; i < static_cast<int>(to_old.size()); ++i)
                c.assign(to_old[i], solved.coloring.code(i));
        }
        Lemma2Report report = check_lemma2(g, spec, v, c);
        any_violation = any_violation || report.violation;
        if (as_json) {
            items.push_back(lemma2_to_json(report));
        } else {
            text += "vertex " + std::to_string(v) + ": h=" + std::to_string(report.h) +
                    (report.extendable ? " extendable" : " non-extendable") +
                    " unique_saturated=" + std::to_string(report.unique_saturated) + "/" +
                    std::to_string(report.required_saturated) +
                    " unique_one_saturated=" + std::to_string(report.unique_one_saturated) +
                    "/" + std::to_string(report.required_one_saturated) +
                    (report.violation ? "  ** LEMMA VIOLATION **" : "") + "\n";
        }
    }
    write_text(out, as_json ? dump(items) : text);
    if (any_violation)
        std::cerr << "lemma2: violation found; this falsifies the implementation "
                     "or the argument it mechanizes\n";
    return any_violation ? kUndecided : kOk;
}

int run_hunt(int a, int b, int n_max, int trials, std::uint64_t seed, bool as_json,
             bool as_csv, const std::string& out) {
    HuntReport report = cmd_hunt(a, b, n_max, trials, seed);
    if (as_json) {
        write_text(out, dump(hunt_to_json(report)));
    } else if (as_csv) {
        std::string text = "trial,seed,n,m,status,fell_back,swaps\n";
        for (const HuntTrial& row : report.rows)
            text += std::to_string(row.trial) + "," + std::to_string(row.seed) + "," +
                    std::to_string(row.n) + "," + std::to_string(row.m) + "," + row.status +
                    "," + (row.fell_back ? "1" : "0") + "," + std::to_string(row.swaps) +
                    "\n";
        write_text(out, text);
    } else {
        std::string text = "trials: " + std::to_string(report.trials) + "\n";
        text += "failures: " + std::to_string(report.failures.size()) + "\n";
        text += "fallbacks: " + std::to_string(report.fallbacks) + " (rate " +
                report.fallback_rate().str() + ")\n";
        for (const HuntFailure& failure : report.failures)
            text += "  FAILURE trial=" + std::to_string(failure.trial) +
                    " seed=" + std::to_string(failure.seed) + " a=" +
                    std::to_string(failure.a) + " b=" + std::to_string(failure.b) +
                    " graph6=" + failure.graph6 + " status=" + failure.status + "\n";
        write_text(out, text);
    }
    return report.failures.empty() ? kOk : kUndecided;
}

int run_bounds(int a_max, int b_max, bool as_json, bool as_csv, const std::string& out) {
    BoundTable table = bounds_table(a_max, b_max);
    if (as_json) {
        write_text(out, dump(bounds_to_json(table)));
        return kOk;
    }
    if (as_csv) {
        std::string text = "a,b,ours,dkmr_d1,havet_sereni_d1,improved\n";
        for (const BoundTableRow& row : table.rows)
            text += std::to_string(row.a) + "," + std::to_string(row.b) + "," +
                    row.ours.str() + "," + row.dkmr_d1.str() + "," +
                    (row.has_havet_sereni ? row.havet_sereni_d1.str() : "") + "," +
                    (row.improved ? "1" : "0") + "\n";
        write_text(out, text);
        return kOk;
    }
    std::string text = "a\tb\tours\tdkmr(d=1)\ths(d=1)\timproved\n";
    for (const BoundTableRow& row : table.rows)
        text += std::to_string(row.a) + "\t" + std::to_string(row.b) + "\t" +
                row.ours.str() + "\t" + row.dkmr_d1.str() + "\t" +
                (row.has_havet_sereni ? row.havet_sereni_d1.str() : "-") + "\t" +
                (row.improved ? "yes" : "no") + "\n";
    text += "reference values:\n";
    for (const BoundReference& ref : table.references)
        text += "  " + ref.name + " = " + ref.value.str() + "\n";
    write_text(out, text);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mad, (1,...,1,0,...,0)-coloring, and discharging audits"};
    app.require_subcommand(1);

    std::string out, format, kind = "gnm", method = "auto", coloring_path;
    int n = 10, a = 1, b = 0, defect = 1, vertex = -1, n_max = 20, trials = 100;
    int a_max = 10, b_max = 10;
    long long m = 0, budget = 10'000'000, swap_cap = -1;
    std::uint64_t seed = 0;
    bool as_json = false, as_csv = false;
    GraphArgs graph_args;

    auto* cmd_gen = app.add_subcommand("gen", "generate a graph");
    cmd_gen->add_option("--kind", kind, "complete|cycle|path|star|gnm|below-bound")
        ->check(CLI::IsMember({"complete", "cycle", "path", "star", "gnm", "below-bound"}));
    cmd_gen->add_option("--n", n, "vertex count (leaf count for star)");
    cmd_gen->add_option("--m", m, "edge count (gnm)");
    cmd_gen->add_option("--a", a, "D classes (below-bound)");
    cmd_gen->add_option("--b", b, "O classes (below-bound)");
    cmd_gen->add_option("--seed", seed, "random seed");
    cmd_gen->add_option("--out", out, "output path ('-' = stdout)");
    cmd_gen->add_option("--out-format", format, "edges|g6")
        ->check(CLI::IsMember({"edges", "g6"}));

    auto* cmd_mad = app.add_subcommand("mad", "exact maximum average degree");
    graph_args.attach(cmd_mad);
    cmd_mad->add_flag("--json", as_json);
    cmd_mad->add_option("--out", out);

    auto* cmd_color = app.add_subcommand("color", "decide colorability");
    graph_args.attach(cmd_color);
    cmd_color->add_option("--a", a, "number of D classes")->required();
    cmd_color->add_option("--b", b, "number of O classes")->required();
    cmd_color->add_option("--method", method, "exact|proof|auto")
        ->check(CLI::IsMember({"exact", "proof", "auto"}));
    cmd_color->add_option("--budget", budget, "search node budget");
    cmd_color->add_option("--swap-cap", swap_cap, "swap cap (-1 = 4n)");
    cmd_color->add_option("--seed", seed);
    cmd_color->add_flag("--json", as_json);
    cmd_color->add_option("--out", out);

    auto* cmd_verify = app.add_subcommand("verify", "check a coloring file");
    graph_args.attach(cmd_verify);
    cmd_verify->add_option("--coloring", coloring_path, "coloring JSON file")->required();
    cmd_verify->add_option("--defect", defect, "allowed same-class degree in D classes");
    cmd_verify->add_flag("--json", as_json);
    cmd_verify->add_option("--out", out);

    auto* cmd_audit = app.add_subcommand("audit", "layer closure + exact discharging");
    graph_args.attach(cmd_audit);
    cmd_audit->add_option("--a", a, "number of D classes")->required();
    cmd_audit->add_option("--b", b, "number of O classes")->required();
    cmd_audit->add_flag("--json", as_json);
    cmd_audit->add_option("--out", out);

    auto* cmd_lemma2 = app.add_subcommand("lemma2", "saturated-neighbor counting check");
    graph_args.attach(cmd_lemma2);
    cmd_lemma2->add_option("--a", a, "number of D classes")->required();
    cmd_lemma2->add_option("--b", b, "number of O classes")->required();
    cmd_lemma2->add_option("--vertex", vertex, "vertex to check (default: all)");
    cmd_lemma2->add_option("--coloring", coloring_path,
                           "coloring of g - vertex (default: solve exactly)");
    cmd_lemma2->add_option("--budget", budget);
    cmd_lemma2->add_flag("--json", as_json);
    cmd_lemma2->add_option("--out", out);

    auto* cmd_hunt_app = app.add_subcommand("hunt", "counterexample hunt on certified graphs");
    cmd_hunt_app->add_option("--a", a, "number of D classes")->required();
    cmd_hunt_app->add_option("--b", b, "number of O classes")->required();
    cmd_hunt_app->add_option("--n-max", n_max, "max vertex count per trial");
    cmd_hunt_app->add_option("--trials", trials);
    cmd_hunt_app->add_option("--seed", seed);
    cmd_hunt_app->add_flag("--json", as_json);
    cmd_hunt_app->add_flag("--csv", as_csv);
    cmd_hunt_app->add_option("--out", out);

    auto* cmd_bounds = app.add_subcommand("bounds", "threshold comparison table");
    cmd_bounds->add_option("--a-max", a_max);
    cmd_bounds->add_option("--b-max", b_max);
    cmd_bounds->add_flag("--json", as_json);
    cmd_bounds->add_flag("--csv", as_csv);
    cmd_bounds->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(kind, n, m, a, b, seed, out, format);
        if (cmd_mad->parsed()) return run_mad(graph_args, as_json, out);
        if (cmd_color->parsed())
            return run_color(graph_args, a, b, method, budget, swap_cap, seed, as_json, out);
        if (cmd_verify->parsed())
            return run_verify(graph_args, coloring_path, defect, as_json, out);
        if (cmd_audit->parsed()) return run_audit(graph_args, a, b, as_json, out);
        if (cmd_lemma2->parsed())
            return run_lemma2(graph_args, a, b, vertex, coloring_path, budget, as_json, out);
        if (cmd_hunt_app->parsed())
            return run_hunt(a, b, n_max, trials, seed, as_json, as_csv, out);
        if (cmd_bounds->parsed()) return run_bounds(a_max, b_max, as_json, as_csv, out);
    } catch (const std::exception& e) {
        std::cerr << "madcolor: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
