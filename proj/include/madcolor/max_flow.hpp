#pragma once

#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace madcolor {

class FlowNetwork;

struct MaxFlowResult {
    long long value = 0;
    /// Nodes reachable from the source in the final residual network:
    /// the source side of a minimum cut.
    std::vector<bool> source_side;
};

MaxFlowResult max_flow(FlowNetwork net);

/// Directed flow network with nonnegative integer capacities. Every
/// add_arc also creates the zero-capacity reverse arc; the pair shares
/// residual capacity under the xor-1 convention.
class FlowNetwork {
public:
    FlowNetwork(int node_count, int source, int sink)
        : adj_(node_count), source_(source), sink_(sink) {
        if (source < 0 || source >= node_count || sink < 0 || sink >= node_count)
            throw std::out_of_range("FlowNetwork: source/sink out of range");
        if (source == sink) throw std::invalid_argument("FlowNetwork: source == sink");
    }

    int node_count() const { return static_cast<int>(adj_.size()); }
    int source() const { return source_; }
    int sink() const { return sink_; }

    void add_arc(int from, int to, long long capacity) {
        if (from < 0 || from >= node_count() || to < 0 || to >= node_count())
            throw std::out_of_range("FlowNetwork: arc endpoint out of range");
        if (capacity < 0) throw std::invalid_argument("FlowNetwork: negative capacity");
        adj_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, capacity});
        adj_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});
    }

private:
    struct Arc {
        int to;
        long long residual;
    };
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;
    int source_;
    int sink_;

    friend MaxFlowResult max_flow(FlowNetwork net);
};

/// Exact maximum s-t flow (Dinic: level graph + blocking flow). Takes the
/// network by value; all scratch state lives in the copy, so concurrent
/// calls on distinct copies are safe.
inline MaxFlowResult max_flow(FlowNetwork net) {
    const int n = net.node_count();
    const int s = net.source(), t = net.sink();
    auto& arcs = net.arcs_;
    auto& adj = net.adj_;

    std::vector<int> level(n), iter(n);
    auto bfs = [&]() {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        q.push(s);
        level[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : adj[v]) {
                const auto& a = arcs[id];
                if (a.residual > 0 && level[a.to] == -1) {
                    level[a.to] = level[v] + 1;
                    q.push(a.to);
                }
            }
        }
        return level[t] != -1;
    };

    // Iterative DFS for one augmenting path in the level graph.
    auto augment = [&]() -> long long {
        std::vector<int> path;  // arc ids from s to current node
        int v = s;
        for (;;) {
            if (v == t) {
                long long pushed = std::numeric_limits<long long>::max();
                for (int id : path) pushed = std::min(pushed, arcs[id].residual);
                for (int id : path) {
                    arcs[id].residual -= pushed;
                    arcs[id ^ 1].residual += pushed;
                }
                return pushed;
            }
            bool advanced = false;
            for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
                int id = adj[v][i];
                const auto& a = arcs[id];
                if (a.residual > 0 && level[a.to] == level[v] + 1) {
                    path.push_back(id);
                    v = a.to;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                level[v] = -1;  // dead end in this phase
                if (v == s) return 0;
                v = path.empty() ? s : arcs[path.back() ^ 1].to;
                if (!path.empty()) path.pop_back();
            }
        }
    };

    long long total = 0;
    while (bfs()) {
        std::fill(iter.begin(), iter.end(), 0);
        for (;;) {
            long long pushed = augment();
            if (pushed == 0) break;
            total += pushed;
        }
    }

    MaxFlowResult result;
    result.value = total;
    result.source_side.assign(n, false);
    std::vector<int> stack{s};
    result.source_side[s] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int id : adj[v]) {
            const auto& a = arcs[id];
            if (a.residual > 0 && !result.source_side[a.to]) {
                result.source_side[a.to] = true;
                stack.push_back(a.to);
            }
        }
    }
    return result;
}

}  // namespace madcolor
