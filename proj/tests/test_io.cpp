#include <catch2/catch_amalgamated.hpp>

#include "tropgossip/io.hpp"
#include "tropgossip/rng.hpp"

using namespace tropgossip;

TEST_CASE("matrix text round trip") {
    std::string text = "0,90,140\n90,0,60\n140,60,0\n";
    TropMatrix m = parse_matrix_text(text);
    CHECK(m.at(0, 1) == TropScalar(90));
    CHECK(matrix_to_text(m) == text);

    TropMatrix with_inf = parse_matrix_text("0,inf\n1/2,0\n");
    CHECK(with_inf.at(0, 1).is_inf());
    CHECK(with_inf.at(1, 0) == TropScalar(Rat(1, 2)));
    CHECK(parse_matrix_text(matrix_to_text(with_inf)) == with_inf);

    CHECK_THROWS_AS(parse_matrix_text("0,1\n2\n"), std::invalid_argument);
}

TEST_CASE("matrix json round trip on random matrices") {
    Rng rng(127);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + int(rand_below(rng, 5));
        TropMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.set(i, j, rand_chance(rng, 1, 5) ? TropScalar::infinity()
                                                   : TropScalar(rand_rat(rng, -30, 30, 7)));
        CHECK(matrix_from_json(matrix_to_json(m)) == m);
        CHECK(parse_matrix_text(matrix_to_text(m)) == m);
    }
}

TEST_CASE("cone json shape") {
    PolyCone c = cone_from_generators(
        3, {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}});
    json j = cone_to_json(c);
    CHECK(j["ambient"] == 3);
    CHECK(j["rays"].size() == 3);
    CHECK(j["facets"].size() == 3);
    CHECK(j["rays"][0].size() == 3);
}

TEST_CASE("graph json round trip") {
    DetourGraph g = c10_graph(1, 2, 3, 4, 5, 6);
    DetourGraph back = graph_from_json(graph_to_json(g));
    CHECK(realize(back) == realize(g));
}

TEST_CASE("state dump text round trip") {
    GossipState s = apply_call(apply_call(identity_state(4), 0, 1), 1, 2);
    std::string dump = state_to_dump(s);
    CHECK(state_from_dump(dump) == s);
    CHECK(dump.substr(0, 2) == "4\n");
}

TEST_CASE("enumeration report serialization") {
    EnumerationReport r = enumerate_monoid(3);
    json j = enumeration_to_json(r);
    CHECK(j["count"] == 11);
    CHECK(j["max_length"] == 3);
    CHECK(j["histogram"]["0"] == 1);
    std::string csv = enumeration_to_csv(r);
    CHECK(csv.find("3,11,3") != std::string::npos);
}
