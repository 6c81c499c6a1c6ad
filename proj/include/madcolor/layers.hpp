#pragma once

#include <algorithm>
#include <iterator>
#include <set>
#include <vector>

#include "madcolor/coloring.hpp"
#include "madcolor/graph.hpp"

namespace madcolor {

/// Degree surplus d(v) - (a+b); may be negative.
inline int h_value(const Graph& g, ColorSpec spec, int v) {
    return g.degree(v) - spec.total();
}

/// The unique maximum H within V-F whose members all satisfy, against F:
///   (1) at least max(a - h(v), 0) neighbors inside F, and
///   (2) at least a + b - h(v) neighbors inside F union H.
/// Computed by peeling candidates that fail either condition. (1) is
/// static; (2) only loses neighbors as candidates leave, so the fixed
/// point does not depend on the deletion order (we use smallest id).
inline std::vector<int> next_layer(const Graph& g, ColorSpec spec,
                                   const std::vector<int>& f_set) {
    const int n = g.vertex_count();
    std::vector<bool> in_f(n, false);
    for (int v : f_set) in_f.at(v) = true;

    std::vector<bool> candidate(n, false);
    std::vector<int> nbrs_in_f(n, 0), nbrs_in_fc(n, 0);
    for (int v = 0; v < n; ++v) candidate[v] = !in_f[v];
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) {
            if (in_f[u]) ++nbrs_in_f[v];
            if (in_f[u] || candidate[u]) ++nbrs_in_fc[v];
        }
    }

    auto fails = [&](int v) {
        int h = h_value(g, spec, v);
        if (nbrs_in_f[v] < std::max(spec.defective - h, 0)) return true;
        return nbrs_in_fc[v] < spec.total() - h;
    };

    std::set<int> queue;
    for (int v = 0; v < n; ++v)
        if (candidate[v] && fails(v)) queue.insert(v);
    while (!queue.empty()) {
        int v = *queue.begin();
        queue.erase(queue.begin());
        if (!candidate[v]) continue;
        candidate[v] = false;
        for (int u : g.neighbors(v)) {
            --nbrs_in_fc[u];
            if (candidate[u] && fails(u)) queue.insert(u);
        }
    }

    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (candidate[v]) out.push_back(v);
    return out;
}

/// Per-vertex layer index realizing the nested family F_0 within F_1 ...,
/// where F_0 is the high-degree seed and each later layer is the maximum
/// admissible extension. Vertices the closure never reaches stay at
/// kUncovered.
struct LayerDecomposition {
    static constexpr int kUncovered = -1;

    std::vector<int> layer;  // kUncovered or the k at which v entered F_k
    bool covered = false;    // true iff no vertex is uncovered
    int max_layer = 0;       // largest finite layer (0 when empty)

    bool is_covered(int v) const { return layer.at(v) != kUncovered; }

    /// F_k as a sorted vertex list.
    std::vector<int> f_set(int k) const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(layer.size()); ++v)
            if (layer[v] != kUncovered && layer[v] <= k) out.push_back(v);
        return out;
    }
};

/// Iterates next_layer from the degree-(2a+2b) seed until it stalls.
inline LayerDecomposition closure(const Graph& g, ColorSpec spec) {
    spec.validate();
    if (spec.defective < 1)
        throw std::invalid_argument("closure: requires at least one D class");
    const int n = g.vertex_count();
    LayerDecomposition out;
    out.layer.assign(n, LayerDecomposition::kUncovered);

    std::vector<int> f_set;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) >= 2 * spec.total()) {
            out.layer[v] = 0;
            f_set.push_back(v);
        }
    }
    int k = 0;
    for (;;) {
        std::vector<int> h_set = next_layer(g, spec, f_set);
        if (h_set.empty()) break;
        ++k;
        for (int v : h_set) out.layer[v] = k;
        std::vector<int> merged;
        merged.reserve(f_set.size() + h_set.size());
        std::merge(f_set.begin(), f_set.end(), h_set.begin(), h_set.end(),
                   std::back_inserter(merged));
        f_set = std::move(merged);
    }
    out.max_layer = k;
    out.covered = true;
    for (int v = 0; v < n; ++v)
        if (out.layer[v] == LayerDecomposition::kUncovered) out.covered = false;
    return out;
}

}  // namespace madcolor
