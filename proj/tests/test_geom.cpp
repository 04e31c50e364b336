#include <catch2/catch_amalgamated.hpp>

#include "tropgossip/geom/fan.hpp"
#include "tropgossip/rng.hpp"

using namespace tropgossip;

namespace {

ZVec zv(std::vector<long> v) {
    ZVec out;
    for (long x : v) out.push_back(Int(x));
    return out;
}

// The 6-parameter family realized by the C10 graph with detours, as the
// columns of its linear parameterization in R^(4x4).
std::vector<ZVec> c10_rays() {
    auto entry = [](int i, int j) { return 4 * i + j; };
    std::vector<ZVec> cols(6, ZVec(16, Int(0)));
    auto add = [&](int param, int i, int j, long coeff) { cols[param][entry(i, j)] += coeff; };
    // a
    add(0, 0, 1, 1); add(0, 1, 0, 1); add(0, 0, 2, 1); add(0, 2, 0, 1);
    add(0, 0, 3, 1); add(0, 3, 0, 1);
    // b
    add(1, 0, 3, 2);
    // c
    add(2, 1, 3, 2);
    // d
    add(3, 0, 2, 1); add(3, 2, 0, 1); add(3, 1, 2, 1); add(3, 2, 1, 1);
    add(3, 0, 3, 1); add(3, 3, 0, 1); add(3, 1, 3, 1); add(3, 3, 1, 1);
    // e
    add(4, 0, 3, 2); add(4, 1, 3, 2); add(4, 3, 0, 2); add(4, 3, 1, 2);
    // f
    add(5, 0, 3, 1); add(5, 1, 3, 1); add(5, 2, 3, 1);
    add(5, 3, 0, 1); add(5, 3, 1, 1); add(5, 3, 2, 1);
    return cols;
}

}  // namespace

TEST_CASE("cone from the standard basis of R^3") {
    PolyCone c = cone_from_generators(3, {zv({1, 0, 0}), zv({0, 1, 0}), zv({0, 0, 1})});
    CHECK(c.dim == 3);
    CHECK(c.rays.size() == 3);
    REQUIRE(c.facets.size() == 3);
    CHECK(c.facets == std::vector<ZVec>{zv({0, 0, 1}), zv({0, 1, 0}), zv({1, 0, 0})});
    CHECK(c.equations.empty());
    CHECK(c.contains_point(zv({1, 2, 3})));
    CHECK_FALSE(c.contains_point(zv({1, -2, 3})));
}

TEST_CASE("redundant middle ray is dropped") {
    PolyCone c = cone_from_generators(2, {zv({1, 0}), zv({1, 1}), zv({0, 1})});
    CHECK(c.rays == std::vector<ZVec>{zv({0, 1}), zv({1, 0})});
    CHECK(c.facets.size() == 2);
}

TEST_CASE("cone from inequalities with a redundant inequality") {
    PolyCone c = cone_from_inequalities(2, {zv({1, 0}), zv({0, 1}), zv({1, 1})});
    CHECK(c.rays == std::vector<ZVec>{zv({0, 1}), zv({1, 0})});
    CHECK(c.facets.size() == 2);
}

TEST_CASE("empty inequality list gives the full plane") {
    PolyCone c = cone_from_inequalities(2, {});
    CHECK(c.dim == 2);
    CHECK(c.rays.empty());
    CHECK(c.lineality.size() == 2);
}

TEST_CASE("lower dimensional cones carry span equations") {
    PolyCone c = cone_from_generators(3, {zv({1, 1, 0}), zv({0, 0, 1})});
    CHECK(c.dim == 2);
    REQUIRE(c.equations.size() == 1);
    CHECK(c.equations[0] == zv({1, -1, 0}));
    PolyCone back = cone_from_inequalities(3, c.facets, c.equations);
    CHECK(back == c);
}

TEST_CASE("C10 parameterization is a simplicial 6-dimensional cone in R^16") {
    PolyCone c = cone_from_generators(16, c10_rays());
    CHECK(c.dim == 6);
    CHECK(c.rays.size() == 6);
    CHECK(c.facets.size() == 6);
    CHECK(c.span().dim() == 6);

    PolyCone back = cone_from_inequalities(16, c.facets, c.equations);
    CHECK(back == c);

    auto by_dim = face_poset(c);
    REQUIRE(by_dim.size() == 6);
    for (int d = 1; d <= 6; ++d) CHECK(long(by_dim[d - 1].size()) == binomial(6, d));
}

TEST_CASE("face poset of simplicial and square cones") {
    PolyCone simp = cone_from_generators(3, {zv({1, 0, 0}), zv({0, 1, 0}), zv({0, 0, 1})});
    auto faces = face_poset(simp);
    REQUIRE(faces.size() == 3);
    CHECK(faces[0].size() == 3);
    CHECK(faces[1].size() == 3);
    CHECK(faces[2].size() == 1);

    PolyCone square = cone_from_generators(
        3, {zv({1, 1, 1}), zv({1, -1, 1}), zv({-1, 1, 1}), zv({-1, -1, 1})});
    auto sq = face_poset(square);
    REQUIRE(sq.size() == 3);
    CHECK(sq[0].size() == 4);
    CHECK(sq[1].size() == 4);
    CHECK(sq[2].size() == 1);
}

TEST_CASE("fan check on two orthants of the plane") {
    PolyCone right = cone_from_generators(2, {zv({1, 0}), zv({0, 1})});
    PolyCone left = cone_from_generators(2, {zv({-1, 0}), zv({0, 1})});
    FanCheckResult fc = fan_check({right, left});
    CHECK(fc.is_fan);
    CHECK(fc.f_vector == std::vector<size_t>{3, 2});
    CHECK(fc.pairwise_dim[0][1] == 1);
}

TEST_CASE("fan check detects overlapping cones") {
    PolyCone a = cone_from_generators(2, {zv({1, 0}), zv({0, 1})});
    PolyCone b = cone_from_generators(2, {zv({1, -1}), zv({0, 1})});
    FanCheckResult fc = fan_check({a, b});
    CHECK_FALSE(fc.is_fan);
    REQUIRE(fc.witnesses.size() == 1);
    CHECK(fc.witnesses[0] == std::pair<size_t, size_t>{0, 1});
}

TEST_CASE("intersection of cones") {
    PolyCone a = cone_from_generators(3, {zv({1, 0, 0}), zv({0, 1, 0}), zv({0, 0, 1})});
    PolyCone b = cone_from_inequalities(3, {zv({-1, 1, 0})});
    PolyCone i = intersect(a, b);
    CHECK(i.dim == 3);
    CHECK(i.contains_point(zv({1, 2, 1})));
    CHECK_FALSE(i.contains_point(zv({2, 1, 1})));
}

TEST_CASE("double description round trips on random cones") {
    Rng rng(53);
    for (int t = 0; t < 500; ++t) {
        int ambient = 2 + int(rand_below(rng, 15));
        int nrays = 1 + int(rand_below(rng, 7));
        std::vector<ZVec> gens;
        for (int r = 0; r < nrays; ++r) {
            ZVec v(ambient);
            for (int i = 0; i < ambient; ++i) v[i] = Int(long(rand_below(rng, 7)));
            gens.push_back(v);
        }
        PolyCone c = cone_from_generators(ambient, gens);
        if (c.dim == 0) continue;
        PolyCone back = cone_from_inequalities(ambient, c.facets, c.equations);
        CHECK(back == c);
        for (const ZVec& g : gens) CHECK(c.contains_point(g));
        ZVec interior(ambient, Int(0));
        for (const ZVec& r : c.rays)
            for (int i = 0; i < ambient; ++i) interior[i] += r[i];
        CHECK(c.contains_point(interior));
    }
}

TEST_CASE("inequality systems round trip, lineality included") {
    Rng rng(59);
    for (int t = 0; t < 80; ++t) {
        int ambient = 2 + int(rand_below(rng, 5));
        int nineq = int(rand_below(rng, ambient + 2));
        std::vector<ZVec> normals;
        for (int r = 0; r < nineq; ++r) {
            ZVec v(ambient);
            for (int i = 0; i < ambient; ++i) v[i] = Int(long(rand_below(rng, 7)) - 3);
            normals.push_back(v);
        }
        PolyCone c = cone_from_inequalities(ambient, normals);
        PolyCone back = cone_from_generators(ambient, c.rays, c.lineality);
        CHECK(back == c);
        PolyCone again = cone_from_inequalities(ambient, back.facets, back.equations);
        CHECK(again == c);
        for (const ZVec& r : c.rays) CHECK(c.contains_point(r));
        for (const ZVec& l : c.lineality) {
            CHECK(c.contains_point(l));
            ZVec neg(ambient);
            for (int i = 0; i < ambient; ++i) neg[i] = -l[i];
            CHECK(c.contains_point(neg));
        }
    }
}

TEST_CASE("subspace canonical forms are basis independent") {
    Rng rng(61);
    for (int t = 0; t < 60; ++t) {
        int ambient = 3 + int(rand_below(rng, 6));
        int dim = 1 + int(rand_below(rng, ambient - 1));
        std::vector<ZVec> basis;
        for (int r = 0; r < dim; ++r) {
            ZVec v(ambient);
            for (int i = 0; i < ambient; ++i) v[i] = Int(long(rand_below(rng, 11)) - 5);
            basis.push_back(v);
        }
        LinearSubspace s = make_subspace(ambient, basis);
        // Random invertible integer row operations
        std::vector<ZVec> mixed = basis;
        for (int ops = 0; ops < 12; ++ops) {
            int i = int(rand_below(rng, mixed.size())), j = int(rand_below(rng, mixed.size()));
            if (i == j) continue;
            long f = long(rand_below(rng, 5)) - 2;
            for (int cidx = 0; cidx < ambient; ++cidx) mixed[i][cidx] += Int(f) * mixed[j][cidx];
        }
        LinearSubspace s2 = make_subspace(ambient, mixed);
        CHECK(s == s2);
        CHECK(s.key() == s2.key());
        if (s.dim() > 0) CHECK(s.contains(basis[0]));
    }
}

TEST_CASE("subspace intersection") {
    LinearSubspace a = make_subspace(3, {zv({1, 0, 0}), zv({0, 1, 0})});
    LinearSubspace b = make_subspace(3, {zv({0, 1, 0}), zv({0, 0, 1})});
    LinearSubspace i = subspace_intersection(a, b);
    CHECK(i.dim() == 1);
    CHECK(i.basis[0] == zv({0, 1, 0}));
}
