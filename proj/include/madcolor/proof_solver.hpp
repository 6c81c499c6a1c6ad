#pragma once

#include <cstdint>
#include <vector>

#include "madcolor/coloring.hpp"
#include "madcolor/graph.hpp"
#include "madcolor/layers.hpp"
#include "madcolor/peel.hpp"
#include "madcolor/rng.hpp"
#include "madcolor/solve.hpp"

namespace madcolor {

struct ProofGuidedResult {
    SolveStatus status = SolveStatus::unsat;
    Coloring coloring;        // meaningful only when status == colored
    bool fell_back = false;   // true when solve_exact produced the answer
    long long swaps = 0;      // swap moves executed before success/abort
    long long exact_nodes = 0;
};

namespace detail {

inline long long one_saturated_count(const Graph& g, ColorSpec spec, const Coloring& c) {
    long long count = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (saturation(g, spec, c, v) == SaturationState::one_saturated) ++count;
    return count;
}

}  // namespace detail

/// Incremental solver built from the recoloring move in the layer-closure
/// argument: when a vertex cannot take any class, steal the class of a
/// saturated neighbor whose color is unique around it, and re-place that
/// neighbor. Swapping with a 1-saturated neighbor strictly lowers the
/// number of 1-saturated vertices and swapping with a 0-saturated one
/// never raises it, which this solver asserts after every move. Chains
/// are capped (default 4n swaps over the whole run); on a dead end or an
/// exhausted cap the instance falls back to solve_exact, so the combined
/// procedure stays complete.
inline ProofGuidedResult solve_proof_guided(const Graph& g, ColorSpec spec,
                                            long long swap_cap = -1,
                                            std::uint64_t seed = 0,
                                            long long exact_budget = 10'000'000) {
    spec.validate();
    if (spec.defective < 1)
        throw std::invalid_argument("solve_proof_guided: requires at least one D class");
    const int n = g.vertex_count();
    if (swap_cap < 0) swap_cap = 4LL * n;

    LayerDecomposition layers = closure(g, spec);
    PeelResult peeled = peel(g, spec.total());

    std::vector<int> insert_order = peeled.core;
    std::mt19937_64 rng(seed);
    detail::fisher_yates(insert_order, rng);
    insert_order.insert(insert_order.end(), peeled.removal_order.rbegin(),
                        peeled.removal_order.rend());

    ProofGuidedResult result;
    auto fall_back = [&]() {
        SolveResult exact = solve_exact(g, spec, exact_budget);
        result.status = exact.status;
        result.coloring = exact.coloring;
        result.fell_back = true;
        result.exact_nodes = exact.nodes;
        return result;
    };

    Coloring c(n);
    auto pick_admissible = [&](int v) -> int {
        // Prefer O classes, lowest index first, then D classes.
        std::vector<int> adm = admissible_colors(g, spec, c, v);
        int best = -1;
        for (int code : adm) {
            if (!is_defective_code(spec, code)) return code;
            if (best == -1) best = code;
        }
        return best;  // -1 when nothing is admissible
    };
    auto swap_rank = [&](int u) {
        // Uncovered vertices outrank every finite layer.
        int layer = layers.layer[u];
        return layer == LayerDecomposition::kUncovered ? n + 1 : layer;
    };

    for (int v : insert_order) {
        int current = v;
        while (!c.assigned(current)) {
            int code = pick_admissible(current);
            if (code != -1) {
                c.assign(current, code);
                break;
            }
            // Swap target: a saturated neighbor whose color is unique
            // around `current`, 1-saturated and high-layer first.
            int target = -1;
            bool target_one_sat = false;
            for (int u : unique_colored_neighbors(g, c, current)) {
                SaturationState state = saturation(g, spec, c, u);
                if (state != SaturationState::zero_saturated &&
                    state != SaturationState::one_saturated)
                    continue;
                bool one_sat = state == SaturationState::one_saturated;
                if (target == -1 || (one_sat && !target_one_sat) ||
                    (one_sat == target_one_sat && swap_rank(u) > swap_rank(target))) {
                    target = u;
                    target_one_sat = one_sat;
                }
            }
            if (target == -1 || result.swaps >= swap_cap) return fall_back();

            ++result.swaps;
            long long before = detail::one_saturated_count(g, spec, c);
            int stolen = c.code(target);
            c.clear(target);
            c.assign(current, stolen);
            long long after = detail::one_saturated_count(g, spec, c);
            if (after > before || (target_one_sat && after >= before))
                throw std::logic_error(
                    "solve_proof_guided: 1-saturated count failed to decrease");
            current = target;
        }
    }

    if (!verify(g, spec, c).ok)
        throw std::logic_error("solve_proof_guided: produced an invalid coloring");
    result.status = SolveStatus::colored;
    result.coloring = c;
    return result;
}

}  // namespace madcolor
