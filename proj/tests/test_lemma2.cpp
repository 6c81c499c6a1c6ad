#include <catch2/catch_amalgamated.hpp>

#include "madcolor/generators.hpp"
#include "madcolor/lemma2.hpp"
#include "support.hpp"

using namespace madcolor;

namespace {

int D(ColorSpec spec, int j) { return encode_class(spec, {ColorClass::Kind::defective, j}); }
int O(ColorSpec spec, int i) { return encode_class(spec, {ColorClass::Kind::independent, i}); }

}  // namespace

TEST_CASE("check_lemma2 on the documented instances") {
    ColorSpec spec{1, 1};

    SECTION("K_4 with a blocked fourth vertex") {
        Graph k4 = gen_complete(4);
        Coloring c(4);
        c.assign(0, D(spec, 1));
        c.assign(1, D(spec, 1));
        c.assign(2, O(spec, 1));
        Lemma2Report report = check_lemma2(k4, spec, 3, c);
        CHECK_FALSE(report.extendable);
        CHECK(report.h == 1);
        CHECK(report.required_saturated == 1);
        CHECK(report.unique_saturated == 1);  // the O_1 vertex, 0-saturated
        CHECK(report.required_one_saturated == 0);
        CHECK_FALSE(report.violation);
    }

    SECTION("K_3 with an unsaturated D neighbor is extendable") {
        Graph k3 = gen_complete(3);
        Coloring c(3);
        c.assign(0, D(spec, 1));
        c.assign(1, O(spec, 1));
        Lemma2Report report = check_lemma2(k3, spec, 2, c);
        CHECK(report.extendable);
        CHECK_FALSE(report.violation);
    }

    SECTION("h(v) >= a+b makes the requirements vacuous") {
        ColorSpec spec10{1, 0};
        Graph star = gen_star(5);
        Coloring c(6);
        for (int leaf = 1; leaf <= 5; ++leaf) c.assign(leaf, D(spec10, 1));
        Lemma2Report report = check_lemma2(star, spec10, 0, c);
        CHECK_FALSE(report.extendable);
        CHECK(report.h == 4);
        CHECK(report.required_saturated <= 0);
        CHECK(report.required_one_saturated == 0);
        CHECK_FALSE(report.violation);
    }
}

TEST_CASE("check_lemma2 validates its preconditions") {
    ColorSpec spec{1, 1};
    Graph k3 = gen_complete(3);
    Coloring full(3);
    full.assign(0, D(spec, 1));
    full.assign(1, O(spec, 1));
    full.assign(2, O(spec, 1));
    CHECK_THROWS_AS(check_lemma2(k3, spec, 2, full), std::invalid_argument);

    Coloring sparse(3);
    sparse.assign(0, D(spec, 1));
    CHECK_THROWS_AS(check_lemma2(k3, spec, 2, sparse), std::invalid_argument);

    Coloring invalid(3);
    invalid.assign(0, O(spec, 1));
    invalid.assign(1, O(spec, 1));  // adjacent O_1 pair
    CHECK_THROWS_AS(check_lemma2(k3, spec, 2, invalid), std::invalid_argument);
}

TEST_CASE("sampled non-extendable configurations satisfy the counts") {
    int found = 0;
    for (ColorSpec spec : {ColorSpec{1, 1}, ColorSpec{2, 0}}) {
        auto samples = testsupport::sample_nonextendable(
            spec.defective, spec.independent, 12, 20, 77, 400);
        for (const auto& sample : samples) {
            Lemma2Report report =
                check_lemma2(sample.g, spec, sample.vertex, sample.coloring);
            CAPTURE(spec.defective, spec.independent, sample.vertex);
            REQUIRE_FALSE(report.extendable);
            CHECK_FALSE(report.violation);
            if (report.h < spec.total()) {
                CHECK(report.unique_saturated >= report.required_saturated);
                CHECK(report.unique_one_saturated >= report.required_one_saturated);
            }
            ++found;
        }
    }
    CHECK(found >= 20);
}
