#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "madcolor/densest.hpp"
#include "madcolor/graph.hpp"
#include "madcolor/rng.hpp"

namespace madcolor {

inline Graph gen_complete(int n) {
    if (n < 0) throw std::invalid_argument("complete: n must be nonnegative");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be at least 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

/// Star with `leaves` leaves: vertex 0 is the center, n = leaves + 1.
inline Graph gen_star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star: leaf count must be nonnegative");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

/// G(n, m): m edges sampled uniformly without replacement from all
/// vertex pairs. Deterministic for a fixed seed on every platform.
inline Graph gen_gnm(int n, long long m, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gnm: n must be nonnegative");
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_edges)
        throw std::invalid_argument("gnm: m must be in [0, n(n-1)/2]");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(max_edges);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::mt19937_64 rng(seed);
    // Partial Fisher-Yates: the first m slots end up a uniform m-subset.
    for (long long i = 0; i < m; ++i) {
        long long j = i + static_cast<long long>(detail::bounded(rng, pairs.size() - i));
        std::swap(pairs[i], pairs[j]);
    }
    Graph g(n);
    for (long long i = 0; i < m; ++i) g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

/// Random graph certified to satisfy mad(G) < 4a/3 + b.
///
/// Draws G(n, m) with m one edge short of the density target, then while
/// the exact mad still reaches the bound removes the lexicographically
/// smallest edge inside the densest subgraph. Removal inside the current
/// maximizer shrinks the offending density monotonically, so this always
/// terminates (the empty graph qualifies).
inline Graph gen_below_bound(int a, int b, int n, std::uint64_t seed) {
    if (a < 1) throw std::invalid_argument("gen_below_bound: a must be at least 1");
    if (b < 0) throw std::invalid_argument("gen_below_bound: b must be nonnegative");
    if (n < 1) throw std::invalid_argument("gen_below_bound: n must be at least 1");
    const Rational bound(4LL * a + 3LL * b, 3);
    long long target = (bound * Rational(n) / Rational(2)).ceil() - 1;
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    target = std::max(0LL, std::min(target, max_edges));

    Graph g = gen_gnm(n, target, seed);
    while (g.edge_count() > 0 && mad(g) >= bound) {
        DensestResult dense = densest_subgraph(g);
        std::vector<bool> in(g.vertex_count(), false);
        for (int v : dense.subset) in[v] = true;
        bool cut = false;
        for (int u = 0; u < g.vertex_count() && !cut; ++u) {
            if (!in[u]) continue;
            for (int v : g.neighbors(u)) {
                if (v > u && in[v]) {
                    g.remove_edge(u, v);
                    cut = true;
                    break;
                }
            }
        }
        if (!cut)  // a maximizer always has an internal edge
            throw std::logic_error("gen_below_bound: densest subgraph has no edge");
    }
    return g;
}

/// Named deterministic generators behind one dispatch, mirroring the CLI.
inline Graph gen(const std::string& kind, const std::vector<long long>& params,
                 std::uint64_t seed) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("gen: kind '" + kind + "' takes " +
                                        std::to_string(k) + " parameter(s)");
    };
    if (kind == "complete") {
        want(1);
        return gen_complete(static_cast<int>(params[0]));
    }
    if (kind == "cycle") {
        want(1);
        return gen_cycle(static_cast<int>(params[0]));
    }
    if (kind == "path") {
        want(1);
        return gen_path(static_cast<int>(params[0]));
    }
    if (kind == "star") {
        want(1);
        return gen_star(static_cast<int>(params[0]));
    }
    if (kind == "gnm") {
        want(2);
        return gen_gnm(static_cast<int>(params[0]), params[1], seed);
    }
    throw std::invalid_argument("gen: unknown kind '" + kind + "'");
}

}  // namespace madcolor
