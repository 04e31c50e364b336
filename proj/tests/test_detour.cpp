#include <catch2/catch_amalgamated.hpp>

#include "tropgossip/detour.hpp"
#include "tropgossip/geom/cone.hpp"
#include "tropgossip/rng.hpp"

using namespace tropgossip;

TEST_CASE("path with a single detour") {
    DetourGraph g = detour_example_path(Rat(2), Rat(3));  // a=2, b=3
    TropMatrix m = realize(g);
    CHECK(m.at(0, 1) == TropScalar(9));  // 3a + b
    CHECK(m.at(1, 0) == TropScalar(5));  // a + b
    CHECK_FALSE(kleene_compatible(g));   // the bare path gives a+b, the star keeps 3a+b

    TropMatrix t = realize(transpose_detours(g));
    CHECK(t.at(0, 1) == TropScalar(5));
    CHECK(t.at(1, 0) == TropScalar(9));
    CHECK(t == transpose(m));
}

TEST_CASE("transposing detours twice is the identity") {
    DetourGraph g = c10_graph(1, 2, 3, 4, 5, 6);
    CHECK(realize(transpose_detours(transpose_detours(g))) == realize(g));
}

TEST_CASE("graphs without detours realize metrics") {
    DetourGraph g;
    g.num_vertices = 4;
    g.edges = {{0, 1, Rat(2)}, {1, 2, Rat(1)}, {2, 3, Rat(4)}, {0, 3, Rat(9)}};
    g.labelling = {0, 1, 2, 3};
    TropMatrix m = realize(g);
    CHECK(is_metric(m));
    CHECK(m.at(0, 3) == TropScalar(7));  // through the chain, not the long edge
    CHECK(kleene_compatible(g));
    CHECK(realize(transpose_detours(g)) == m);
}

TEST_CASE("the C10 graph realizes the displayed matrix family") {
    Rat a(1), b(2), c(3), d(4), e(5), f(6);
    DetourGraph g = c10_graph(a, b, c, d, e, f);
    TropMatrix m = realize(g);
    CHECK(m.at(0, 1) == TropScalar(a));
    CHECK(m.at(0, 2) == TropScalar(a + d));
    CHECK(m.at(0, 3) == TropScalar(a + 2 * b + d + 2 * e + f));
    CHECK(m.at(1, 2) == TropScalar(d));
    CHECK(m.at(1, 3) == TropScalar(2 * c + d + 2 * e + f));
    CHECK(m.at(2, 3) == TropScalar(f));
    CHECK(m.at(3, 0) == TropScalar(f + 2 * e + d + a));
    CHECK(m.at(3, 1) == TropScalar(f + 2 * e + d));
    CHECK(m.at(3, 2) == TropScalar(f));
    CHECK(m.at(1, 0) == TropScalar(a));
    CHECK(m.at(2, 0) == TropScalar(a + d));
    CHECK(m.at(2, 1) == TropScalar(d));
    // the (0,3)/(3,0) surplus is 2b
    CHECK(m.at(0, 3).value() - m.at(3, 0).value() == 2 * b);
    CHECK(kleene_compatible(g));
}

TEST_CASE("invalid detours are rejected") {
    DetourGraph g = detour_example_path(Rat(0), Rat(3));  // a=0: detour weight equals the path
    CHECK_THROWS_AS(realize(g), std::invalid_argument);

    DetourGraph dup = detour_example_path(Rat(1), Rat(1));
    dup.detours.push_back(dup.detours[0]);
    CHECK_THROWS_AS(realize(dup), std::invalid_argument);
}

TEST_CASE("realized matrices are zero-diagonal and nonnegative") {
    Rng rng(113);
    for (int t = 0; t < 100; ++t) {
        Rat a(rand_int(rng, 1, 9)), b(rand_int(rng, 1, 9)), c(rand_int(rng, 1, 9));
        Rat d(rand_int(rng, 1, 9)), e(rand_int(rng, 1, 9)), f(rand_int(rng, 1, 9));
        TropMatrix m = realize(c10_graph(a, b, c, d, e, f));
        CHECK(has_zero_diagonal(m));
        CHECK(is_nonnegative(m));
        CHECK(is_metric(kleene_star(m)));
    }
}

TEST_CASE("C10 realizations fill the six-parameter simplicial cone") {
    // the cone generated by the parameterization's coordinate directions
    std::vector<ZVec> cols(6, ZVec(16, Int(0)));
    for (int p = 0; p < 6; ++p) {
        Rat w[6] = {0, 0, 0, 0, 0, 0};
        w[p] = 1;
        TropMatrix m = realize(c10_graph(w[0] + 1, w[1] + 1, w[2] + 1, w[3] + 1, w[4] + 1, w[5] + 1));
        TropMatrix base = realize(c10_graph(1, 1, 1, 1, 1, 1));
        for (int e = 0; e < 16; ++e) {
            Rat diff = (m.at(e / 4, e % 4).value() - base.at(e / 4, e % 4).value());
            cols[p][e] = numerator(diff);  // integer differences by construction
        }
    }
    PolyCone c10 = cone_from_generators(16, cols);
    CHECK(c10.dim == 6);
    CHECK(c10.rays.size() == 6);

    Rng rng(119);
    for (int t = 0; t < 60; ++t) {
        Rat a(rand_int(rng, 1, 9)), b(rand_int(rng, 1, 9)), c(rand_int(rng, 1, 9));
        Rat d(rand_int(rng, 1, 9)), e(rand_int(rng, 1, 9)), f(rand_int(rng, 1, 9));
        TropMatrix m = realize(c10_graph(a, b, c, d, e, f));
        QVec v(16, Rat(0));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) v[i * 4 + j] = m.at(i, j).value();
        CHECK(c10.contains_point(v));
    }
}
