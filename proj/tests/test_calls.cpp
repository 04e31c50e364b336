#include <catch2/catch_amalgamated.hpp>

#include "tropgossip/calls.hpp"
#include "tropgossip/rng.hpp"

using namespace tropgossip;

namespace {

TropMatrix random_metric(Rng& rng, int n) {
    // Shortest-path closure of a random symmetric nonnegative matrix.
    TropMatrix a(n, TropScalar(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            TropScalar w = rand_chance(rng, 1, 8) ? TropScalar::infinity()
                                                  : TropScalar(rand_rat(rng, 0, 20, 4));
            a.set(i, j, w);
            a.set(j, i, w);
        }
    return kleene_star(a);
}

}  // namespace

TEST_CASE("metric factors into C(n,2) calls") {
    TropMatrix car(3);
    car.set(0, 1, TropScalar(90));
    car.set(1, 0, TropScalar(90));
    car.set(0, 2, TropScalar(140));
    car.set(2, 0, TropScalar(140));
    car.set(1, 2, TropScalar(60));
    car.set(2, 1, TropScalar(60));
    CallSequence s = metric_as_calls(car);
    REQUIRE(s.calls.size() == 3);
    CHECK(s.calls[0].w == TropScalar(90));
    CHECK(s.calls[1].w == TropScalar(140));
    CHECK(s.calls[2].w == TropScalar(60));
    CHECK(product(s) == car);

    CHECK(product(metric_as_calls(TropMatrix::all_zero(4))) == TropMatrix::all_zero(4));
    CHECK(product(metric_as_calls(TropMatrix::identity(4))) == TropMatrix::identity(4));
    TropMatrix bad(3, TropScalar(1));
    CHECK_THROWS_AS(metric_as_calls(bad), std::invalid_argument);
}

TEST_CASE("metric_as_calls round trip on random metrics") {
    Rng rng(23);
    for (int t = 0; t < 300; ++t) {
        int n = 2 + int(rand_below(rng, 5));
        TropMatrix m = random_metric(rng, n);
        REQUIRE(is_metric(m));
        CHECK(product(metric_as_calls(m)) == m);
    }
}

TEST_CASE("core witness realizes a prescribed symmetric core") {
    SECTION("single edge on two gossipers") {
        CallSequence s = core_witness(2, {{0, 1}});
        CHECK(symmetric_core(product(s)) == std::set<std::pair<int, int>>{{0, 1}});
    }
    SECTION("path on three gossipers") {
        CallSequence s = core_witness(3, {{0, 1}, {1, 2}});
        TropMatrix p = product(s);
        CHECK(p.at(0, 1) == TropScalar(Rat(3, 2)));
        CHECK(p.at(1, 0) == TropScalar(Rat(3, 2)));
        CHECK(p.at(1, 2) == TropScalar(Rat(5, 4)));
        CHECK(p.at(2, 1) == TropScalar(Rat(5, 4)));
        CHECK(p.at(0, 2) != p.at(2, 0));
        CHECK(symmetric_core(p) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
    }
    SECTION("star on four gossipers") {
        std::vector<std::pair<int, int>> star{{0, 1}, {0, 2}, {0, 3}};
        CallSequence s = core_witness(4, star);
        CHECK(symmetric_core(product(s)) ==
              std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
    }
    SECTION("every connected graph on four vertices") {
        std::vector<std::pair<int, int>> all{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        for (int mask = 0; mask < 64; ++mask) {
            std::vector<std::pair<int, int>> edges;
            std::set<std::pair<int, int>> eset;
            for (int b = 0; b < 6; ++b)
                if (mask & (1 << b)) {
                    edges.push_back(all[b]);
                    eset.insert(all[b]);
                }
            if (!pairs_connected(4, eset)) continue;
            CHECK(symmetric_core(product(core_witness(4, edges))) == eset);
        }
    }
    CHECK_THROWS_AS(core_witness(3, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("irredundance detection") {
    CallSequence s;
    s.n = 3;
    s.push(0, 1, TropScalar(1));
    CHECK(is_irredundant(s));
    s.push(0, 1, TropScalar(2));
    CHECK_FALSE(is_irredundant(s));
}

TEST_CASE("build_W is an irredundant product of binomial(n+1,3) calls") {
    for (int n = 1; n <= 6; ++n) {
        CallSequence w = build_W(n);
        CHECK(long(w.calls.size()) == binomial(n + 1, 3));
        CHECK(is_irredundant(w));
    }
}

TEST_CASE("randomized irredundant products respect the n^2(n-1)/2 bound") {
    Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + int(rand_below(rng, 4));
        CallSequence s;
        s.n = n;
        int len = 1 + int(rand_below(rng, 2 * n * n));
        for (int i = 0; i < len; ++i) {
            int k = int(rand_below(rng, n)), l = int(rand_below(rng, n));
            if (k == l) l = (l + 1) % n;
            s.push(std::min(k, l), std::max(k, l), TropScalar(rand_rat(rng, 0, 9, 2)));
        }
        // Strip redundant factors until irredundant.
        for (;;) {
            TropMatrix full = product(s);
            bool removed = false;
            for (size_t r = 0; r < s.calls.size(); ++r)
                if (product_omitting(s, r) == full) {
                    s.calls.erase(s.calls.begin() + r);
                    removed = true;
                    break;
                }
            if (!removed) break;
        }
        CHECK(is_irredundant(s));
        CHECK(int(s.calls.size()) <= n * n * (n - 1) / 2);
    }
}
