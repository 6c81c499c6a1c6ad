#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "madcolor/coloring.hpp"
#include "madcolor/generators.hpp"
#include "madcolor/graph_io.hpp"
#include "madcolor/proof_solver.hpp"
#include "madcolor/rational.hpp"

namespace madcolor {

struct HuntTrial {
    int trial = 0;
    std::uint64_t seed = 0;
    int n = 0;
    int m = 0;
    std::string status;  // SAT | UNSAT | TIMEOUT | INVALID
    bool fell_back = false;
    long long swaps = 0;
};

struct HuntFailure {
    int trial = 0;
    std::uint64_t seed = 0;
    int a = 0;
    int b = 0;
    std::string graph6;  // full instance for replay
    std::string status;
};

struct HuntReport {
    int a = 0;
    int b = 0;
    int trials = 0;
    int generated = 0;
    long long fallbacks = 0;
    std::vector<HuntTrial> rows;
    std::vector<HuntFailure> failures;

    Rational fallback_rate() const {
        return trials == 0 ? Rational(0) : Rational(fallbacks, trials);
    }
};

/// Empirical falsification attempt: every generated graph is certified
/// below the 4a/3 + b threshold, so each one must come back colorable.
/// Any UNSAT, timeout, or invalid coloring is recorded with the graph,
/// spec, and seed needed to reproduce it. Trials are seeded individually
/// (base seed + trial index), so the report does not depend on execution
/// order.
inline HuntReport cmd_hunt(int a, int b, int n_max, int trials, std::uint64_t seed) {
    if (a < 1) throw std::invalid_argument("hunt: a must be at least 1");
    if (b < 0) throw std::invalid_argument("hunt: b must be nonnegative");
    if (n_max < 1) throw std::invalid_argument("hunt: n_max must be at least 1");
    if (trials < 0) throw std::invalid_argument("hunt: trials must be nonnegative");

    HuntReport report;
    report.a = a;
    report.b = b;
    report.trials = trials;
    ColorSpec spec{a, b};
    for (int trial = 0; trial < trials; ++trial) {
        std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(trial);
        std::mt19937_64 rng(trial_seed);
        int n = 1 + static_cast<int>(detail::bounded(rng, n_max));
        Graph g = gen_below_bound(a, b, n, trial_seed);
        ++report.generated;

        ProofGuidedResult solved = solve_proof_guided(g, spec, -1, trial_seed);
        HuntTrial row;
        row.trial = trial;
        row.seed = trial_seed;
        row.n = g.vertex_count();
        row.m = g.edge_count();
        row.fell_back = solved.fell_back;
        row.swaps = solved.swaps;
        if (solved.fell_back) ++report.fallbacks;

        if (solved.status == SolveStatus::colored) {
            row.status = verify(g, spec, solved.coloring).ok ? "SAT" : "INVALID";
        } else if (solved.status == SolveStatus::unsat) {
            row.status = "UNSAT";
        } else {
            row.status = "TIMEOUT";
        }
        if (row.status != "SAT")
            report.failures.push_back(
                {trial, trial_seed, a, b, to_graph6(g), row.status});
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace madcolor
