#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "madcolor/rational.hpp"

namespace madcolor {

/// Sparsity threshold 4a/3 + b under which (1,...,1,0,...,0)-colorability
/// with a ones and b zeros is guaranteed.
inline Rational bound_ours(int a, int b) {
    if (a < 1) throw std::invalid_argument("bound_ours: a must be at least 1");
    if (b < 0) throw std::invalid_argument("bound_ours: b must be nonnegative");
    return Rational(4LL * a + 3LL * b, 3);
}

/// Dorbec-Kaiser-Montassier-Raspaud threshold
/// a + b + da(a+1) / ((a+d+1)(a+1) + ab) for (d,...,d,0,...,0)-coloring.
inline Rational bound_dkmr(int a, int b, int d) {
    if (a < 1) throw std::invalid_argument("bound_dkmr: a must be at least 1");
    if (b < 0) throw std::invalid_argument("bound_dkmr: b must be nonnegative");
    if (d < 1) throw std::invalid_argument("bound_dkmr: d must be at least 1");
    long long num = static_cast<long long>(d) * a * (a + 1);
    long long den = static_cast<long long>(a + d + 1) * (a + 1) +
                    static_cast<long long>(a) * b;
    return Rational(a + b) + Rational(num, den);
}

/// Havet-Sereni threshold a + ad/(a+d) for (d,...,d)-coloring (no
/// independent classes).
inline Rational bound_havet_sereni(int a, int d) {
    if (a < 1) throw std::invalid_argument("bound_havet_sereni: a must be at least 1");
    if (d < 1) throw std::invalid_argument("bound_havet_sereni: d must be at least 1");
    return Rational(a) + Rational(static_cast<long long>(a) * d, a + d);
}

struct BoundTableRow {
    int a = 0;
    int b = 0;
    Rational ours;
    Rational dkmr_d1;
    bool has_havet_sereni = false;  // only b = 0 rows have one
    Rational havet_sereni_d1;
    bool improved = false;  // ours strictly beats dkmr at d = 1
};

struct BoundReference {
    std::string name;
    Rational value;
};

struct BoundTable {
    std::vector<BoundTableRow> rows;
    std::vector<BoundReference> references;
};

/// Grid of thresholds for 1 <= a <= a_max, 0 <= b <= b_max, with exact
/// comparisons against the d = 1 literature values. The improvement flag
/// is true exactly when a > 1 or b > 0.
inline BoundTable bounds_table(int a_max, int b_max) {
    if (a_max < 1) throw std::invalid_argument("bounds_table: a_max must be at least 1");
    if (b_max < 0) throw std::invalid_argument("bounds_table: b_max must be nonnegative");
    BoundTable table;
    for (int a = 1; a <= a_max; ++a) {
        for (int b = 0; b <= b_max; ++b) {
            BoundTableRow row;
            row.a = a;
            row.b = b;
            row.ours = bound_ours(a, b);
            row.dkmr_d1 = bound_dkmr(a, b, 1);
            if (b == 0) {
                row.has_havet_sereni = true;
                row.havet_sereni_d1 = bound_havet_sereni(a, 1);
            }
            row.improved = row.ours > row.dkmr_d1;
            table.rows.push_back(row);
        }
    }
    table.references = {
        {"borodin_kostochka_2011_(1,0)", Rational(12, 5)},
        {"borodin_kostochka_2014_(d,0)_d=2", Rational(3) - Rational(1, 3)},
        {"borodin_kostochka_yancey_2013_(1,1)", Rational(14, 5)},
    };
    return table;
}

}  // namespace madcolor
