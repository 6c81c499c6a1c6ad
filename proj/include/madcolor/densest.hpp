#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "madcolor/graph.hpp"
#include "madcolor/max_flow.hpp"
#include "madcolor/rational.hpp"

namespace madcolor {

struct DensestResult {
    std::vector<int> subset;  // nonempty, sorted
    Rational density;         // exactly |E(S)| / |S|
};

/// Exact |E(S)|/|S| of a vertex subset.
inline Rational subset_density(const Graph& g, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("subset_density: empty subset");
    std::vector<bool> in(g.vertex_count(), false);
    for (int v : subset) in.at(v) = true;
    long long edges = 0;
    for (int v : subset)
        for (int u : g.neighbors(v))
            if (u > v && in[u]) ++edges;
    return Rational(edges, static_cast<long long>(subset.size()));
}

/// Is there a nonempty S with |E(S)|/|S| > p/q? Returns such an S if so.
///
/// Flow construction, with all capacities pre-scaled by q so they stay
/// integral: source -> v with capacity q*m; each edge {u,v} becomes arcs
/// u->v and v->u with capacity q; v -> sink with capacity q*m + 2p - q*deg(v).
/// A cut {s} + S has value q*m*n - 2q*|S|*(|E(S)|/|S| - p/q), so some S
/// beats p/q exactly when the min cut is below q*m*n.
inline std::optional<std::vector<int>> density_exceeds(const Graph& g, long long p,
                                                       long long q) {
    if (q <= 0) throw std::invalid_argument("density_exceeds: denominator must be positive");
    if (p < 0) throw std::invalid_argument("density_exceeds: negative density guess");
    const long long n = g.vertex_count();
    const long long m = g.edge_count();
    if (m == 0) return std::nullopt;
    // Densities never exceed m, so large guesses are settled without flow.
    if (Rational(p, q) >= Rational(m)) return std::nullopt;

    const int source = static_cast<int>(n);
    const int sink = static_cast<int>(n) + 1;
    FlowNetwork net(static_cast<int>(n) + 2, source, sink);
    for (int v = 0; v < n; ++v) net.add_arc(source, v, q * m);
    for (auto [u, v] : g.edges()) {
        net.add_arc(u, v, q);
        net.add_arc(v, u, q);
    }
    for (int v = 0; v < n; ++v) net.add_arc(v, sink, q * m + 2 * p - q * g.degree(v));

    MaxFlowResult flow = max_flow(std::move(net));
    if (flow.value >= q * m * n) return std::nullopt;
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
        if (flow.source_side[v]) subset.push_back(v);
    return subset;
}

/// Exact maximizer of |E(S)|/|S| by rational binary search over [1/2, m].
///
/// Each probe either raises the lower end to the exact density of a
/// strictly better witness or lowers the upper end to the failed guess.
/// Distinct achievable densities have denominators <= n and so differ by
/// at least 1/(n(n-1)); once the interval is narrower than that, the best
/// witness is optimal, which one final probe at its density confirms.
inline DensestResult densest_subgraph(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("densest_subgraph: graph has no edges");
    const long long n = g.vertex_count();
    const long long m = g.edge_count();

    DensestResult best;
    auto first = density_exceeds(g, 1, 2);
    if (!first) {
        // Max density is exactly 1/2: any single edge achieves it.
        auto [u, v] = g.edges().front();
        best.subset = {u, v};
        best.density = Rational(1, 2);
        return best;
    }
    best.subset = *first;
    best.density = subset_density(g, best.subset);

    Rational low = best.density;
    Rational high(m);
    const Rational separation(1, n * (n - 1));
    while (high - low >= separation) {
        Rational mid = (low + high) / 2;
        auto found = density_exceeds(g, mid.num(), mid.den());
        if (found) {
            best.subset = *found;
            best.density = subset_density(g, best.subset);
            low = best.density;
        } else {
            high = mid;
        }
    }

    if (density_exceeds(g, best.density.num(), best.density.den()))
        throw std::logic_error("densest_subgraph: witness failed the optimality probe");
    return best;
}

/// mad(G): twice the densest-subgraph density; 0 for edgeless graphs.
inline Rational mad(const Graph& g) {
    if (g.edge_count() == 0) return Rational(0);
    return Rational(2) * densest_subgraph(g).density;
}

/// Literal enumeration over all nonempty vertex subsets. Test oracle.
inline Rational mad_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("mad_bruteforce: graph too large (n > 20)");
    if (g.edge_count() == 0) return Rational(0);
    std::vector<std::uint32_t> adj_bits(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj_bits[v] |= (1u << u);

    Rational best(0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        long long edges = 0;
        int size = 0;
        for (int v = 0; v < n; ++v) {
            if (!(mask & (1u << v))) continue;
            ++size;
            edges += __builtin_popcount(adj_bits[v] & mask & ((1u << v) - 1));
        }
        Rational avg(2 * edges, size);
        if (avg > best) best = avg;
    }
    return best;
}

}  // namespace madcolor
