#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace madcolor {

/// Simple undirected graph on dense vertex ids 0..n-1 with adjacency sets.
///
/// No self-loops, no parallel edges; the edge count is cached. Instances
/// are treated as immutable once built, so they can be shared freely
/// across concurrent tasks.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(check_order(n)) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::set<int>& neighbors(int v) const { return adj_.at(v); }

    bool has_edge(int u, int v) const {
        if (!valid(u) || !valid(v)) return false;
        return adj_[u].count(v) != 0;
    }

    void add_edge(int u, int v) {
        if (!valid(u) || !valid(v))
            throw std::out_of_range("Graph: vertex id out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (adj_[u].count(v)) throw std::invalid_argument("Graph: duplicate edge");
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++m_;
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) throw std::invalid_argument("Graph: no such edge");
        adj_[u].erase(v);
        adj_[v].erase(u);
        --m_;
    }

    /// Edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Induced subgraph on `keep` (sorted, deduplicated internally).
    /// New ids follow the sorted order of the kept originals; the mapping
    /// new id -> old id is returned alongside.
    std::pair<Graph, std::vector<int>> induced(const std::vector<int>& keep) const {
        std::set<int> kept(keep.begin(), keep.end());
        std::vector<int> to_old(kept.begin(), kept.end());
        for (int v : to_old)
            if (!valid(v)) throw std::out_of_range("Graph: vertex id out of range");
        std::vector<int> to_new(vertex_count(), -1);
        for (int i = 0; i < static_cast<int>(to_old.size()); ++i) to_new[to_old[i]] = i;
        Graph h(static_cast<int>(to_old.size()));
        for (int i = 0; i < static_cast<int>(to_old.size()); ++i)
            for (int w : adj_[to_old[i]])
                if (to_new[w] > i) h.add_edge(i, to_new[w]);
        return {std::move(h), std::move(to_old)};
    }

    int min_degree() const {
        int d = vertex_count() == 0 ? 0 : degree(0);
        for (int v = 1; v < vertex_count(); ++v) d = std::min(d, degree(v));
        return d;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adj_ == b.adj_;
    }

private:
    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        return n;
    }
    bool valid(int v) const { return v >= 0 && v < vertex_count(); }

    std::vector<std::set<int>> adj_;
    int m_ = 0;
};

}  // namespace madcolor
