#pragma once

#include <vector>

#include "madcolor/graph.hpp"

namespace madcolor {

struct PeelResult {
    /// Vertices in the order they were removed.
    std::vector<int> removal_order;
    /// Maximal induced subgraph with minimum degree >= threshold; sorted.
    std::vector<int> core;
};

/// Repeatedly removes vertices of current degree < t until none remains.
/// Removal proceeds in rounds: every vertex qualifying at the start of a
/// round is removed during it, in increasing id order; vertices that drop
/// below t mid-round wait for the next round. The surviving core is
/// independent of the removal order.
inline PeelResult peel(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("peel: negative threshold");
    int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    PeelResult result;
    std::vector<int> round;
    for (;;) {
        round.clear();
        for (int v = 0; v < n; ++v)
            if (!removed[v] && deg[v] < t) round.push_back(v);
        if (round.empty()) break;
        for (int v : round) {
            removed[v] = true;
            result.removal_order.push_back(v);
            for (int u : g.neighbors(v))
                if (!removed[u]) --deg[u];
        }
    }
    for (int v = 0; v < n; ++v)
        if (!removed[v]) result.core.push_back(v);
    return result;
}

}  // namespace madcolor
