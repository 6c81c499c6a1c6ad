#include <catch2/catch_amalgamated.hpp>

#include "madcolor/generators.hpp"
#include "madcolor/layers.hpp"
#include "support.hpp"

using namespace madcolor;

TEST_CASE("h_value") {
    CHECK(h_value(gen_complete(4), ColorSpec{1, 1}, 0) == 1);
    CHECK(h_value(Graph(1), ColorSpec{1, 0}, 0) == -1);
    CHECK(h_value(gen_star(5), ColorSpec{1, 0}, 0) == 4);
}

TEST_CASE("next_layer on the documented instances") {
    // K_2 at (1,0) from F = {}: each endpoint needs one F-neighbor.
    CHECK(next_layer(gen_complete(2), ColorSpec{1, 0}, {}).empty());

    // Star K_{1,5} at (1,0) from F = {center}: all leaves qualify.
    CHECK(next_layer(gen_star(5), ColorSpec{1, 0}, {0}) ==
          std::vector<int>{1, 2, 3, 4, 5});

    // F = V leaves nothing to add.
    CHECK(next_layer(gen_complete(3), ColorSpec{1, 0}, {0, 1, 2}).empty());
}

TEST_CASE("closure on the documented instances") {
    LayerDecomposition star = closure(gen_star(5), ColorSpec{1, 0});
    CHECK(star.covered);
    CHECK(star.layer[0] == 0);
    for (int leaf = 1; leaf <= 5; ++leaf) CHECK(star.layer[leaf] == 1);

    LayerDecomposition k2 = closure(gen_complete(2), ColorSpec{1, 0});
    CHECK_FALSE(k2.covered);
    CHECK(k2.layer[0] == LayerDecomposition::kUncovered);
    CHECK(k2.layer[1] == LayerDecomposition::kUncovered);

    LayerDecomposition p3 = closure(gen_path(3), ColorSpec{1, 0});
    CHECK(p3.covered);
    CHECK(p3.layer[1] == 0);  // middle vertex: degree 2 >= 2a+2b = 2
    CHECK(p3.layer[0] == 1);
    CHECK(p3.layer[2] == 1);

    CHECK_THROWS_AS(closure(gen_path(3), ColorSpec{0, 2}), std::invalid_argument);
}

TEST_CASE("layer soundness and maximality on random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 2 + static_cast<int>(seed % 13);
        long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
        Graph g = gen_gnm(n, (seed * 9 + 1) % (max_edges + 1), seed);
        ColorSpec spec{1 + static_cast<int>(seed % 2), static_cast<int>(seed % 3)};
        LayerDecomposition layers = closure(g, spec);
        CAPTURE(seed, n, spec.defective, spec.independent);

        // Layer 0 is exactly the degree seed.
        for (int v = 0; v < n; ++v)
            CHECK((layers.layer[v] == 0) == (g.degree(v) >= 2 * spec.total()));

        // Every layer k+1 vertex meets both conditions against F_k.
        for (int v = 0; v < n; ++v) {
            int k1 = layers.layer[v];
            if (k1 == LayerDecomposition::kUncovered || k1 == 0) continue;
            int in_f = 0, in_fh = 0;
            for (int u : g.neighbors(v)) {
                if (layers.is_covered(u) && layers.layer[u] <= k1 - 1) ++in_f;
                if (layers.is_covered(u) && layers.layer[u] <= k1) ++in_fh;
            }
            int h = h_value(g, spec, v);
            CHECK(in_f >= std::max(spec.defective - h, 0));
            CHECK(in_fh >= spec.total() - h);
        }

        // Maximality: one more peeling round adds nothing.
        CHECK(next_layer(g, spec, layers.f_set(layers.max_layer)).empty());
    }
}
