#pragma once

#include <algorithm>
#include <vector>

#include "madcolor/coloring.hpp"
#include "madcolor/graph.hpp"
#include "madcolor/layers.hpp"

namespace madcolor {

/// Saturation counts around a vertex v against a coloring of g - v.
///
/// When v cannot be extended and h(v) < a+b, at least a+b-h(v) of v's
/// uniquely-colored neighbors must be saturated and at least
/// max(a-h(v), 0) of those 1-saturated; `violation` flags any sampled
/// configuration where the counts fall short.
struct Lemma2Report {
    int vertex = 0;
    int h = 0;
    bool extendable = false;
    int unique_saturated = 0;
    int unique_one_saturated = 0;
    int required_saturated = 0;
    int required_one_saturated = 0;
    bool violation = false;
};

/// `c` must assign every vertex except v and be valid on that support.
inline Lemma2Report check_lemma2(const Graph& g, ColorSpec spec, int v,
                                 const Coloring& c) {
    if (v < 0 || v >= g.vertex_count())
        throw std::out_of_range("check_lemma2: vertex out of range");
    if (c.assigned(v))
        throw std::invalid_argument("check_lemma2: vertex must be uncolored");
    if (c.assigned_count() != g.vertex_count() - 1)
        throw std::invalid_argument("check_lemma2: coloring must cover all of g - v");
    if (!verify_partial(g, spec, c).ok)
        throw std::invalid_argument("check_lemma2: coloring is invalid on g - v");

    Lemma2Report report;
    report.vertex = v;
    report.h = h_value(g, spec, v);
    report.extendable = !admissible_colors(g, spec, c, v).empty();
    report.required_saturated = spec.total() - report.h;
    report.required_one_saturated = std::max(spec.defective - report.h, 0);

    for (int u : unique_colored_neighbors(g, c, v)) {
        SaturationState state = saturation(g, spec, c, u);
        if (state == SaturationState::zero_saturated ||
            state == SaturationState::one_saturated)
            ++report.unique_saturated;
        if (state == SaturationState::one_saturated) ++report.unique_one_saturated;
    }

    report.violation = !report.extendable && report.h < spec.total() &&
                       (report.unique_saturated < report.required_saturated ||
                        report.unique_one_saturated < report.required_one_saturated);
    return report;
}

}  // namespace madcolor
