#include <catch2/catch_amalgamated.hpp>

#include "tropgossip/fan/gossip_fan.hpp"
#include "tropgossip/fan/pq.hpp"

using namespace tropgossip;

namespace {

std::vector<TropScalar> weights(std::initializer_list<long> ws) {
    std::vector<TropScalar> v;
    for (long w : ws) v.push_back(TropScalar(w));
    return v;
}

}  // namespace

TEST_CASE("index-increasing path forms") {
    ProductScheme s{3, {{0, 1}, {1, 2}, {0, 2}}};
    // entry (0,2): the direct call at position 2 and the 0-1-2 path
    auto f02 = entry_path_forms(s, 0, 2);
    CHECK(f02 == std::vector<FormMask>{0b011, 0b100});
    // entry (2,0): only the direct call; 2-1-0 would need positions in
    // decreasing order
    auto f20 = entry_path_forms(s, 2, 0);
    CHECK(f20 == std::vector<FormMask>{0b100});
    auto f12 = entry_path_forms(s, 1, 2);
    CHECK(f12 == std::vector<FormMask>{0b010, 0b101});
    CHECK(entry_path_forms(ProductScheme{3, {{0, 1}}}, 0, 2).empty());
}

TEST_CASE("minimal antichain prunes dominated forms") {
    CHECK(minimal_antichain({0b01, 0b11}) == std::vector<FormMask>{0b01});
    CHECK(minimal_antichain({0b011, 0b100}) == std::vector<FormMask>{0b011, 0b100});
}

TEST_CASE("chamber split of the three-call scheme") {
    ProductScheme s{3, {{0, 1}, {1, 2}, {0, 2}}};
    ChamberAnalysis ca = chambers(s);
    // Entries (0,2), (1,0) and (1,2) each see two competing forms
    // (min(a3, a1+a2), min(a1, a2+a3), min(a2, a1+a3)); any two "path"
    // choices contradict each other, so the feasible chambers are the
    // all-direct region plus one per path choice.
    CHECK(ca.chambers.size() == 4);
    for (const Chamber& ch : ca.chambers) CHECK(ch.inf_entries == 0);
    // direct verification of the competing forms on entry (1,0)
    TropMatrix p = scheme_product(s, {TropScalar(5), TropScalar(1), TropScalar(1)});
    CHECK(p.at(1, 0) == TropScalar(2));  // a2 + a3 beats the direct a1
}

TEST_CASE("single-call schemes") {
    ProductScheme s{2, {{0, 1}}};
    ChamberAnalysis ca = chambers(s);
    REQUIRE(ca.chambers.size() == 1);
    ImageCone ic = image_cone(s, ca.chambers[0]);
    CHECK(ic.cone.dim == 1);
    CHECK(ic.inf_entries == 0);
}

TEST_CASE("chamber choices match the exact tropical product at sample points") {
    Rng rng(67);
    std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int trial = 0; trial < 25; ++trial) {
        ProductScheme s;
        s.n = 4;
        for (int t = 0; t < 6; ++t) s.edges.push_back(pairs[rand_below(rng, pairs.size())]);
        ChamberAnalysis ca = chambers(s);
        for (const Chamber& ch : ca.chambers) {
            // interior sample: sum of the region rays
            std::vector<TropScalar> w(6, TropScalar(0));
            QVec pt(6, Rat(0));
            for (const ZVec& r : ch.region_rays)
                for (int t = 0; t < 6; ++t) pt[t] += Rat(r[t]);
            for (int t = 0; t < 6; ++t) w[t] = TropScalar(pt[t]);
            TropMatrix prod = scheme_product(s, w);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    if (i == j) continue;
                    if (ch.inf_entries & (uint32_t(1) << (i * 4 + j))) {
                        CHECK(prod.at(i, j).is_inf());
                    } else {
                        Rat expect = 0;
                        for (int t = 0; t < 6; ++t)
                            if (ch.choice[i * 4 + j] & (FormMask(1) << t)) expect += pt[t];
                        CHECK(prod.at(i, j) == TropScalar(expect));
                    }
                }
        }
    }
}

TEST_CASE("span census for n = 2") {
    SpanCensus c = enumerate_spans(2, 1);
    REQUIRE(c.spans.size() == 1);
    CHECK(c.spans[0].span.dim() == 1);
    CHECK(c.spans[0].maximal_index >= 0);
}

TEST_CASE("span census is identical across thread counts") {
    SpanCensus one = enumerate_spans(3, 3, 1);
    SpanCensus four = enumerate_spans(3, 3, 4);
    REQUIRE(one.spans.size() == four.spans.size());
    for (size_t i = 0; i < one.spans.size(); ++i) {
        CHECK(one.spans[i].span.key() == four.spans[i].span.key());
        REQUIRE(one.spans[i].cones.size() == four.spans[i].cones.size());
        for (size_t j = 0; j < one.spans[i].cones.size(); ++j)
            CHECK(one.spans[i].cones[j] == four.spans[i].cones[j]);
        CHECK(one.spans[i].maximal_index == four.spans[i].maximal_index);
    }
    GossipFan f1 = gossip_fan(3, 1), f3 = gossip_fan(3, 3);
    CHECK(f1.check.f_vector == f3.check.f_vector);
    CHECK(f1.check.is_fan == f3.check.is_fan);
}

TEST_CASE("span census and orbits for n = 3") {
    SpanCensus c = enumerate_spans(3, 3);
    REQUIRE(c.spans.size() == 7);
    std::vector<LinearSubspace> spans;
    for (auto& e : c.spans) {
        CHECK(e.span.dim() == 3);
        CHECK(e.maximal_index >= 0);
        spans.push_back(e.span);
    }
    OrbitReport orbits = orbit_classify(spans, 3, false);
    CHECK(orbits.sizes == std::vector<size_t>{1, 6});
}

TEST_CASE("the n = 3 gossip fan") {
    GossipFan fan = gossip_fan(3);
    CHECK(fan.maximal.size() == 7);
    CHECK(fan.check.is_fan);
    CHECK(fan.is_pure);
    CHECK(fan.codim1_connected_flag);
    CHECK(fan.metric_cone_present);

    // D_3 itself is one of the maximal cones
    PolyCone d3 = metric_cone(3);
    bool found = false;
    for (const PolyCone& c : fan.maximal) found = found || c == d3;
    CHECK(found);

    ClosureReport rep = closure_sample_check(fan, 500, 1234);
    CHECK(rep.failures == 0);
}

TEST_CASE("the n = 2 fan is the single metric cone") {
    GossipFan fan = gossip_fan(2);
    REQUIRE(fan.maximal.size() == 1);
    CHECK(fan.maximal[0] == metric_cone(2));
    FanMembership member(fan.maximal);
    TropMatrix sym(2, TropScalar(0));
    sym.set(0, 1, TropScalar(3));
    sym.set(1, 0, TropScalar(3));
    CHECK(member.contains(sym));
    TropMatrix asym(2, TropScalar(0));
    asym.set(0, 1, TropScalar(3));
    asym.set(1, 0, TropScalar(1));
    CHECK_FALSE(member.contains(asym));
}

TEST_CASE("the P/Q example: equal spans, 10-dimensional overlap, non-convex union") {
    PqReport rep = pq_example_check(2024);
    CHECK(rep.spans_equal);
    CHECK(rep.substitution_matches);
    CHECK(rep.transformed_system_matches);
    CHECK(rep.intersection_dim == 10);
    REQUIRE(rep.witness_found);
    // the witness pair satisfies its own system strictly and the sum escapes both
    for (const ZVec& w : pq::p_ineqs()) CHECK(dot(w, rep.p_point) > 0);
    CHECK(dot(pq::p_ineqs()[rep.p_violated], rep.mid_point) <= 0);
    // the realized matrices are genuine 5x5 gossip-monoid points
    TropMatrix mp = pq_matrix(rep.p_point);
    CHECK(has_zero_diagonal(mp));
    CHECK(is_nonnegative(mp));
    CHECK(is_metric(kleene_star(mp)));
}

TEST_CASE("kleene star projections of maximal cones stay metric") {
    GossipFan fan = gossip_fan(3);
    Rng rng(71);
    for (const PolyCone& cone : fan.maximal) {
        QVec pt(9, Rat(0));
        for (const ZVec& r : cone.rays) {
            Rat c = rand_rat(rng, 1, 5, 2);
            for (int e = 0; e < 9; ++e) pt[e] += c * Rat(r[e]);
        }
        TropMatrix a(3, TropScalar(0));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) a.set(i, j, TropScalar(pt[i * 3 + j]));
        CHECK(is_metric(kleene_star(a)));
    }
}
