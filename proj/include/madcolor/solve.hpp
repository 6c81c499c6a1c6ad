#pragma once

#include <algorithm>
#include <vector>

#include "madcolor/coloring.hpp"
#include "madcolor/graph.hpp"
#include "madcolor/peel.hpp"

namespace madcolor {

enum class SolveStatus { colored, unsat, timeout };

struct SolveResult {
    SolveStatus status = SolveStatus::unsat;
    Coloring coloring;      // meaningful only when status == colored
    long long nodes = 0;    // search-tree nodes visited
};

namespace detail {

/// Cheap emptiness probe: does the unassigned vertex v admit any class?
inline bool has_admissible(const Graph& g, ColorSpec spec, const Coloring& c, int v) {
    std::vector<int> count(spec.total(), 0);
    std::vector<int> witness(spec.total(), -1);
    for (int u : g.neighbors(v)) {
        if (!c.assigned(u)) continue;
        ++count[c.code(u)];
        witness[c.code(u)] = u;
    }
    for (int code = 0; code < spec.total(); ++code) {
        if (count[code] == 0) return true;
        if (is_defective_code(spec, code) && count[code] == 1 &&
            saturation(g, spec, c, witness[code]) == SaturationState::not_saturated)
            return true;
    }
    return false;
}

class ExactSolver {
public:
    ExactSolver(const Graph& g, ColorSpec spec, long long budget)
        : g_(g), spec_(spec), budget_(budget), coloring_(g.vertex_count()),
          in_core_(g.vertex_count(), false) {}

    SolveResult run() {
        PeelResult peeled = peel(g_, spec_.total());
        order_ = peeled.core;
        for (int v : order_) in_core_[v] = true;
        // Fail-first: most constrained (highest degree) core vertices first.
        std::sort(order_.begin(), order_.end(), [&](int x, int y) {
            if (g_.degree(x) != g_.degree(y)) return g_.degree(x) > g_.degree(y);
            return x < y;
        });

        SolveResult result;
        bool sat = search(0);
        result.nodes = nodes_;
        if (timed_out_) {
            result.status = SolveStatus::timeout;
            return result;
        }
        if (!sat) {
            result.status = SolveStatus::unsat;
            return result;
        }
        // Peeled vertices always extend: re-inserting in reverse removal
        // order, each has fewer assigned neighbors than there are classes.
        for (auto it = peeled.removal_order.rbegin(); it != peeled.removal_order.rend();
             ++it) {
            std::vector<int> adm = admissible_colors(g_, spec_, coloring_, *it);
            if (adm.empty())
                throw std::logic_error("solve_exact: peeled vertex failed to extend");
            coloring_.assign(*it, adm.front());
        }
        if (!verify(g_, spec_, coloring_).ok)
            throw std::logic_error("solve_exact: produced an invalid coloring");
        result.status = SolveStatus::colored;
        result.coloring = coloring_;
        return result;
    }

private:
    bool search(std::size_t pos) {
        if (++nodes_ > budget_) {
            timed_out_ = true;
            return false;
        }
        if (pos == order_.size()) return true;
        int v = order_[pos];

        std::vector<int> adm = admissible_colors(g_, spec_, coloring_, v);
        for (int code : adm) {
            // Interchangeable class indices are introduced in increasing
            // first-use order: at most one fresh D and one fresh O branch.
            if (is_defective_code(spec_, code)) {
                if (code > d_used_) continue;
            } else {
                if (code - spec_.defective > o_used_) continue;
            }
            coloring_.assign(v, code);
            bool fresh_d = is_defective_code(spec_, code) && code == d_used_;
            bool fresh_o = !is_defective_code(spec_, code) &&
                           code - spec_.defective == o_used_;
            if (fresh_d) ++d_used_;
            if (fresh_o) ++o_used_;

            if (forward_ok(v) && search(pos + 1)) return true;

            if (fresh_d) --d_used_;
            if (fresh_o) --o_used_;
            coloring_.clear(v);
            if (timed_out_) return false;
        }
        return false;
    }

    bool forward_ok(int v) const {
        for (int u : g_.neighbors(v))
            if (in_core_[u] && !coloring_.assigned(u) &&
                !has_admissible(g_, spec_, coloring_, u))
                return false;
        return true;
    }

    const Graph& g_;
    ColorSpec spec_;
    long long budget_;
    Coloring coloring_;
    std::vector<bool> in_core_;
    std::vector<int> order_;
    long long nodes_ = 0;
    int d_used_ = 0;  // D codes in use are exactly 0..d_used_-1
    int o_used_ = 0;
    bool timed_out_ = false;
};

}  // namespace detail

/// Complete backtracking decision procedure. Peels vertices of degree
/// < a+b first and searches only the core (peeled vertices always extend
/// greedily afterwards), forward-checks neighbor admissibility, and
/// breaks the symmetry between interchangeable class indices. Unsat is
/// only reported on exhausted search; exceeding the node budget reports
/// timeout instead.
inline SolveResult solve_exact(const Graph& g, ColorSpec spec,
                               long long node_budget = 10'000'000) {
    spec.validate();
    if (spec.total() < 1)
        throw std::invalid_argument("solve_exact: need at least one color class");
    return detail::ExactSolver(g, spec, node_budget).run();
}

/// Exhaustive enumeration of all (a+b)^n total assignments. Test oracle;
/// refuses instances with more than 10^7 assignments.
inline SolveResult solve_bruteforce(const Graph& g, ColorSpec spec) {
    spec.validate();
    if (spec.total() < 1)
        throw std::invalid_argument("solve_bruteforce: need at least one color class");
    const int n = g.vertex_count();
    const long long kLimit = 10'000'000;
    long long space = 1;
    for (int i = 0; i < n; ++i) {
        space *= spec.total();
        if (space > kLimit)
            throw std::invalid_argument("solve_bruteforce: instance too large");
    }

    SolveResult result;
    std::vector<int> digits(n, 0);
    for (long long it = 0; it < space; ++it) {
        Coloring c(n);
        for (int v = 0; v < n; ++v) c.assign(v, digits[v]);
        ++result.nodes;
        if (verify(g, spec, c).ok) {
            result.status = SolveStatus::colored;
            result.coloring = c;
            return result;
        }
        for (int v = 0; v < n; ++v) {
            if (++digits[v] < spec.total()) break;
            digits[v] = 0;
        }
    }
    result.status = SolveStatus::unsat;
    return result;
}

}  // namespace madcolor
