#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "madcolor/graph.hpp"

namespace madcolor {

/// The pair (a, b): a classes that may induce maximum degree 1 ("D"
/// classes) and b fully independent classes ("O" classes).
struct ColorSpec {
    int defective = 0;    // a
    int independent = 0;  // b

    int total() const { return defective + independent; }

    void validate() const {
        if (defective < 0 || independent < 0)
            throw std::invalid_argument("ColorSpec: class counts must be nonnegative");
    }
};

/// A color class tag: D(j) with 1 <= j <= a, or O(i) with 1 <= i <= b.
struct ColorClass {
    enum class Kind { defective, independent };
    Kind kind;
    int index;  // 1-based within its kind

    friend bool operator==(const ColorClass&, const ColorClass&) = default;
};

/// Classes are packed into codes 0..a+b-1: D_1..D_a first, then O_1..O_b.
inline int encode_class(ColorSpec spec, ColorClass cls) {
    int bound = cls.kind == ColorClass::Kind::defective ? spec.defective : spec.independent;
    if (cls.index < 1 || cls.index > bound)
        throw std::out_of_range("ColorClass: index out of range for spec");
    return cls.kind == ColorClass::Kind::defective ? cls.index - 1
                                                   : spec.defective + cls.index - 1;
}

inline ColorClass decode_class(ColorSpec spec, int code) {
    if (code < 0 || code >= spec.total())
        throw std::out_of_range("ColorClass: code out of range for spec");
    if (code < spec.defective) return {ColorClass::Kind::defective, code + 1};
    return {ColorClass::Kind::independent, code - spec.defective + 1};
}

inline bool is_defective_code(ColorSpec spec, int code) { return code < spec.defective; }

/// "D1".."Da" / "O1".."Ob".
inline std::string class_label(ColorSpec spec, int code) {
    ColorClass cls = decode_class(spec, code);
    return (cls.kind == ColorClass::Kind::defective ? "D" : "O") + std::to_string(cls.index);
}

/// Per-vertex optional class assignment. Partial colorings are
/// first-class; validity is defined by verify, not by construction.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(int n) : code_(n, kUnassigned) {}

    static constexpr int kUnassigned = -1;

    int size() const { return static_cast<int>(code_.size()); }
    bool assigned(int v) const { return code_.at(v) != kUnassigned; }
    int code(int v) const { return code_.at(v); }

    void assign(int v, int code) {
        if (code < 0) throw std::invalid_argument("Coloring: negative class code");
        code_.at(v) = code;
    }
    void clear(int v) { code_.at(v) = kUnassigned; }

    int assigned_count() const {
        int k = 0;
        for (int c : code_)
            if (c != kUnassigned) ++k;
        return k;
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<int> code_;
};

struct Violation {
    enum class Reason { unassigned, independence, defect_exceeded };
    int vertex;
    Reason reason;
    int code;                       // kUnassigned for Reason::unassigned
    std::vector<int> conflicting;   // same-class neighbors
};

struct VerifyResult {
    bool ok = false;
    std::vector<Violation> violations;
};

namespace detail {

inline void check_codes_in_range(ColorSpec spec, const Coloring& c) {
    spec.validate();
    for (int v = 0; v < c.size(); ++v)
        if (c.assigned(v) && c.code(v) >= spec.total())
            throw std::out_of_range("Coloring: class index out of range for spec");
}

inline VerifyResult verify_impl(const Graph& g, ColorSpec spec, const Coloring& c,
                                int defect, bool require_total) {
    if (c.size() != g.vertex_count())
        throw std::invalid_argument("verify: coloring size does not match graph");
    if (defect < 0) throw std::invalid_argument("verify: negative defect");
    check_codes_in_range(spec, c);

    VerifyResult result;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!c.assigned(v)) {
            if (require_total)
                result.violations.push_back({v, Violation::Reason::unassigned,
                                             Coloring::kUnassigned, {}});
            continue;
        }
        int code = c.code(v);
        std::vector<int> same;
        for (int u : g.neighbors(v))
            if (c.assigned(u) && c.code(u) == code) same.push_back(u);
        if (is_defective_code(spec, code)) {
            if (static_cast<int>(same.size()) > defect)
                result.violations.push_back(
                    {v, Violation::Reason::defect_exceeded, code, std::move(same)});
        } else if (!same.empty()) {
            result.violations.push_back(
                {v, Violation::Reason::independence, code, std::move(same)});
        }
    }
    result.ok = result.violations.empty();
    return result;
}

}  // namespace detail

/// Total-coloring check: every vertex assigned, every O class independent,
/// every vertex of a D class has at most `defect` same-class neighbors.
inline VerifyResult verify(const Graph& g, ColorSpec spec, const Coloring& c,
                           int defect = 1) {
    return detail::verify_impl(g, spec, c, defect, /*require_total=*/true);
}

/// Same conditions restricted to the assigned support; unassigned
/// vertices are ignored rather than reported.
inline VerifyResult verify_partial(const Graph& g, ColorSpec spec, const Coloring& c,
                                   int defect = 1) {
    return detail::verify_impl(g, spec, c, defect, /*require_total=*/false);
}

enum class SaturationState { unassigned, not_saturated, zero_saturated, one_saturated };

/// A vertex is saturated if it is colored O_i (0-saturated) or colored
/// D_j while having a D_j-colored neighbor (1-saturated).
inline SaturationState saturation(const Graph& g, ColorSpec spec, const Coloring& c,
                                  int v) {
    if (!c.assigned(v)) return SaturationState::unassigned;
    int code = c.code(v);
    if (!is_defective_code(spec, code)) return SaturationState::zero_saturated;
    for (int u : g.neighbors(v))
        if (c.assigned(u) && c.code(u) == code) return SaturationState::one_saturated;
    return SaturationState::not_saturated;
}

/// Classes that can be given to the unassigned vertex v while keeping the
/// assigned support valid at defect 1. O_i works when no neighbor has it;
/// D_j works when no neighbor has it, or exactly one does and that
/// neighbor is itself unsaturated (so it can absorb one more D_j edge).
inline std::vector<int> admissible_colors(const Graph& g, ColorSpec spec,
                                          const Coloring& c, int v) {
    if (c.assigned(v)) throw std::invalid_argument("admissible_colors: vertex already assigned");
    detail::check_codes_in_range(spec, c);

    std::vector<int> count(spec.total(), 0);
    std::vector<int> witness(spec.total(), -1);
    for (int u : g.neighbors(v)) {
        if (!c.assigned(u)) continue;
        ++count[c.code(u)];
        witness[c.code(u)] = u;
    }
    std::vector<int> out;
    for (int code = 0; code < spec.total(); ++code) {
        if (count[code] == 0) {
            out.push_back(code);
        } else if (is_defective_code(spec, code) && count[code] == 1 &&
                   saturation(g, spec, c, witness[code]) == SaturationState::not_saturated) {
            out.push_back(code);
        }
    }
    return out;
}

/// Neighbors of v whose class occurs exactly once among v's assigned
/// neighbors (the set S in the saturation-counting argument).
inline std::vector<int> unique_colored_neighbors(const Graph& g, const Coloring& c,
                                                 int v) {
    std::map<int, std::pair<int, int>> seen;  // code -> (count, witness)
    for (int u : g.neighbors(v)) {
        if (!c.assigned(u)) continue;
        auto& entry = seen[c.code(u)];
        ++entry.first;
        entry.second = u;
    }
    std::vector<int> out;
    for (auto& [code, entry] : seen)
        if (entry.first == 1) out.push_back(entry.second);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace madcolor
