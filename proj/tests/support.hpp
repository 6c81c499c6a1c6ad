#pragma once

// Test-only helpers: independent oracles and samplers shared by the unit
// and acceptance suites. Nothing here may call the code path it checks.

#include <cstdint>
#include <optional>
#include <vector>

#include "madcolor/coloring.hpp"
#include "madcolor/generators.hpp"
#include "madcolor/graph.hpp"
#include "madcolor/rng.hpp"
#include "madcolor/solve.hpp"

namespace testsupport {

using madcolor::Coloring;
using madcolor::ColorSpec;
using madcolor::Graph;

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

struct CutArc {
    int from;
    int to;
    long long capacity;
};

/// Min s-t cut by enumerating every source-side subset. Independent of
/// the flow solver; usable up to ~20 nodes.
inline long long bruteforce_min_cut(int node_count, const std::vector<CutArc>& arcs,
                                    int s, int t) {
    long long best = -1;
    for (std::uint32_t mask = 0; mask < (1u << node_count); ++mask) {
        if (!(mask & (1u << s)) || (mask & (1u << t))) continue;
        long long cut = 0;
        for (const CutArc& arc : arcs)
            if ((mask & (1u << arc.from)) && !(mask & (1u << arc.to))) cut += arc.capacity;
        if (best < 0 || cut < best) best = cut;
    }
    return best;
}

/// Colors g - v with the exact solver and lifts the result back onto g's
/// vertex ids, leaving v unassigned. Empty when g - v is uncolorable.
inline std::optional<Coloring> color_minus_vertex(const Graph& g, ColorSpec spec, int v) {
    std::vector<int> keep;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    auto [sub, to_old] = g.induced(keep);
    madcolor::SolveResult solved = madcolor::solve_exact(sub, spec);
    if (solved.status != madcolor::SolveStatus::colored) return std::nullopt;
    Coloring c(g.vertex_count());
    for (int i = 0; i < static_cast<int>(to_old.size()); ++i)
        c.assign(to_old[i], solved.coloring.code(i));
    return c;
}

struct Lemma2Sample {
    Graph g;
    int vertex;
    Coloring coloring;  // assigns everything except `vertex`
};

/// Draws (graph, vertex, coloring-of-g-minus-v) configurations where v is
/// not extendable: below-bound graph, random vertex, exact coloring of
/// the rest. Returns as many as found within `max_attempts`.
inline std::vector<Lemma2Sample> sample_nonextendable(int a, int b, int n_max,
                                                      int need, std::uint64_t seed,
                                                      int max_attempts) {
    std::vector<Lemma2Sample> samples;
    ColorSpec spec{a, b};
    for (int attempt = 0; attempt < max_attempts && (int)samples.size() < need;
         ++attempt) {
        std::uint64_t attempt_seed = seed + static_cast<std::uint64_t>(attempt);
        std::mt19937_64 rng(attempt_seed);
        int n = 3 + static_cast<int>(madcolor::detail::bounded(rng, n_max - 2));
        Graph g = madcolor::gen_below_bound(a, b, n, attempt_seed);
        if (g.vertex_count() < 2) continue;
        int v = static_cast<int>(madcolor::detail::bounded(rng, g.vertex_count()));
        auto c = color_minus_vertex(g, spec, v);
        if (!c) continue;
        if (madcolor::admissible_colors(g, spec, *c, v).empty())
            samples.push_back({std::move(g), v, std::move(*c)});
    }
    return samples;
}

}  // namespace testsupport
