#include <catch2/catch_amalgamated.hpp>

#include "tropgossip/gossip.hpp"
#include "tropgossip/rng.hpp"

using namespace tropgossip;

TEST_CASE("apply_call and the tropical product agree") {
    // Exhaustively over all n=3 states with true diagonal.
    const int n = 3;
    for (int mask = 0; mask < 64; ++mask) {
        GossipState s = identity_state(n);
        int b = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if (mask & (1 << b)) s.bits |= (unsigned __int128)1 << (j * n + i);
                ++b;
            }
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l) {
                GossipState t = apply_call(s, k, l);
                TropMatrix viaTrop = trop_mat_mul(state_to_matrix(s),
                                                  phone_call_matrix(n, k, l, TropScalar(0)));
                CHECK(state_to_matrix(t) == viaTrop);
            }
    }
}

TEST_CASE("call idempotence and the first-example pattern") {
    GossipState s = identity_state(3);
    GossipState once = apply_call(s, 0, 1);
    CHECK(apply_call(once, 0, 1) == once);
    CHECK(once.knows(0, 1));
    CHECK(once.knows(1, 0));
    CHECK_FALSE(once.knows(2, 0));

    GossipState after = apply_call(once, 1, 2);
    TropMatrix m = state_to_matrix(after);
    TropMatrix expect(3, TropScalar(0));
    expect.set(2, 0, TropScalar::infinity());
    CHECK(m == expect);
}

TEST_CASE("monoid sizes and maximal lengths for small n") {
    struct Row {
        int n;
        unsigned long long count;
        int maxlen;
    };
    // 1, 2, 11, 189, 9152 elements; lengths 0, 1, 3, 4, 6
    for (Row row : {Row{1, 1, 0}, Row{2, 2, 1}, Row{3, 11, 3}, Row{4, 189, 4}, Row{5, 9152, 6}}) {
        EnumerationReport rep = enumerate_monoid(row.n);
        CHECK(rep.complete);
        CHECK(rep.total_count == row.count);
        CHECK(rep.max_length == row.maxlen);
        CHECK(rep.length_histogram.at(0) == 1);
        unsigned long long sum = 0;
        for (auto& [len, cnt] : rep.length_histogram) sum += cnt;
        CHECK(sum == rep.total_count);
    }
}

TEST_CASE("length of the all-zero matrix") {
    CHECK(element_length(all_known_state(2)) == 1);
    CHECK(element_length(all_known_state(3)) == 3);
    CHECK(element_length(all_known_state(4)) == 4);
    CHECK(element_length(all_known_state(5)) == 6);
}

TEST_CASE("identity has length zero; asymmetric knowledge is unreachable") {
    CHECK(element_length(identity_state(4)) == 0);
    GossipState s = identity_state(2);
    s.bits |= (unsigned __int128)1 << (1 * 2 + 0);  // gossiper 1 knows gossip 0 only
    CHECK_FALSE(element_length(s).has_value());
}

TEST_CASE("maximal irredundant product lengths") {
    CHECK(max_irredundant_length(1).max_length == 0);
    CHECK(max_irredundant_length(2).max_length == 1);
    CHECK(max_irredundant_length(3).max_length == 3);
    CHECK(max_irredundant_length(4).max_length == 5);
}

TEST_CASE("pessimal chains") {
    auto calls3 = construct_pessimal(3);
    REQUIRE(calls3 == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 1}});
    CHECK(verify_pessimal(3, calls3));
    CHECK(construct_pessimal(2).size() == 1);
    for (int n = 2; n <= 8; ++n) {
        auto calls = construct_pessimal(n);
        CHECK(long(calls.size()) == binomial(n, 2));
        CHECK(verify_pessimal(n, calls));
    }
    CHECK_FALSE(verify_pessimal(3, {{0, 1}, {0, 1}}));
}

TEST_CASE("no pessimal chain exceeds C(n,2) in randomized search") {
    Rng rng(41);
    for (int n = 3; n <= 5; ++n) {
        long bound = binomial(n, 2);
        for (int t = 0; t < 20000; ++t) {
            std::vector<std::pair<int, int>> calls;
            for (long i = 0; i <= bound; ++i) {
                int k = int(rand_below(rng, n)), l = int(rand_below(rng, n));
                if (k == l) l = (l + 1) % n;
                calls.push_back({std::min(k, l), std::max(k, l)});
            }
            CHECK_FALSE(verify_pessimal(n, calls));
        }
    }
}

TEST_CASE("quotient homomorphism onto the 0/inf monoid") {
    Rng rng(43);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + int(rand_below(rng, 4));
        auto squash = [n](const TropMatrix& m) {
            TropMatrix out(n, TropScalar::infinity());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (m.at(i, j).is_finite()) out.set(i, j, TropScalar(0));
            return out;
        };
        TropMatrix a = TropMatrix::identity(n), b = TropMatrix::identity(n);
        for (int i = 0; i < 4; ++i) {
            int k = int(rand_below(rng, n)), l = int(rand_below(rng, n));
            if (k == l) l = (l + 1) % n;
            TropScalar w = rand_chance(rng, 1, 6) ? TropScalar::infinity()
                                                  : TropScalar(rand_rat(rng, 0, 9, 2));
            (i % 2 ? a : b) = trop_mat_mul(i % 2 ? a : b, phone_call_matrix(n, k, l, w));
        }
        CHECK(squash(trop_mat_mul(a, b)) == trop_mat_mul(squash(a), squash(b)));
    }
}

TEST_CASE("prefixes of irredundant boolean sequences are irredundant") {
    Rng rng(47);
    auto boolean_irredundant = [](int n, const std::vector<std::pair<int, int>>& calls) {
        GossipState full = product_state(n, calls);
        for (size_t skip = 0; skip < calls.size(); ++skip) {
            std::vector<std::pair<int, int>> rest;
            for (size_t i = 0; i < calls.size(); ++i)
                if (i != skip) rest.push_back(calls[i]);
            if (product_state(n, rest) == full) return false;
        }
        return true;
    };
    int checked = 0;
    for (int t = 0; t < 60000 && checked < 10000; ++t) {
        int n = 3 + int(rand_below(rng, 3));
        std::vector<std::pair<int, int>> calls;
        int len = 2 + int(rand_below(rng, 5));
        for (int i = 0; i < len; ++i) {
            int k = int(rand_below(rng, n)), l = int(rand_below(rng, n));
            if (k == l) l = (l + 1) % n;
            calls.push_back({std::min(k, l), std::max(k, l)});
        }
        if (!boolean_irredundant(n, calls)) continue;
        ++checked;
        for (size_t pre = 1; pre < calls.size(); ++pre)
            CHECK(boolean_irredundant(
                n, std::vector<std::pair<int, int>>(calls.begin(), calls.begin() + pre)));
    }
    CHECK(checked >= 5000);
}

TEST_CASE("boolean and tropical products agree on random sequences") {
    Rng rng(151);
    for (int t = 0; t < 400; ++t) {
        int n = 2 + int(rand_below(rng, 5));
        GossipState s = identity_state(n);
        TropMatrix m = TropMatrix::identity(n);
        int len = 1 + int(rand_below(rng, 8));
        for (int i = 0; i < len; ++i) {
            int k = int(rand_below(rng, n)), l = int(rand_below(rng, n));
            if (k == l) l = (l + 1) % n;
            s = apply_call(s, k, l);
            m = trop_mat_mul(m, phone_call_matrix(n, std::min(k, l), std::max(k, l), TropScalar(0)));
        }
        CHECK(state_to_matrix(s) == m);
    }
}

TEST_CASE("state dump round trip") {
    GossipState s = apply_call(apply_call(identity_state(4), 0, 1), 1, 2);
    TropMatrix m = state_to_matrix(s);
    CHECK(matrix_to_state(m) == s);
}
