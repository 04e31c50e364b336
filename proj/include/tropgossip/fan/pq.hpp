// The two 10-parameter families of 5x5 matrices whose closures share a
// linear span but whose union is not a convex cone: equal spans, a matching
// parameter substitution, a 10-dimensional intersection, and an explicit
// rational witness pair for non-convexity.
#pragma once

#include "../geom/cone.hpp"
#include "../matrix.hpp"
#include "../rng.hpp"

namespace tropgossip {

namespace pq {

// Parameters a..j are indices 0..9.
enum Param { A, B, C, D, E, F, G, H, I, J };

/// Rows of the linear map parameters -> matrix entries (25 x 10).
inline std::vector<ZVec> p_form() {
    std::vector<ZVec> rows(25, ZVec(10, Int(0)));
    auto set = [&](int i, int j, std::initializer_list<Param> ps) {
        for (Param p : ps) rows[i * 5 + j][p] += 1;
    };
    set(0, 1, {G}); set(0, 2, {I}); set(0, 3, {F}); set(0, 4, {J});
    set(1, 0, {G}); set(1, 2, {G, I}); set(1, 3, {D}); set(1, 4, {D, E});
    set(2, 0, {I}); set(2, 1, {H}); set(2, 3, {B}); set(2, 4, {B, C});
    set(3, 0, {D, G}); set(3, 1, {D}); set(3, 2, {B}); set(3, 4, {C});
    set(4, 0, {J}); set(4, 1, {C, D}); set(4, 2, {A, B}); set(4, 3, {C});
    return rows;
}

inline std::vector<ZVec> q_form() {
    std::vector<ZVec> rows(25, ZVec(10, Int(0)));
    auto set = [&](int i, int j, std::initializer_list<Param> ps) {
        for (Param p : ps) rows[i * 5 + j][p] += 1;
    };
    set(0, 1, {G}); set(0, 2, {J}); set(0, 3, {G, H}); set(0, 4, {F});
    set(1, 0, {G}); set(1, 2, {G, J}); set(1, 3, {D}); set(1, 4, {D, E});
    set(2, 0, {J}); set(2, 1, {I}); set(2, 3, {B}); set(2, 4, {B, C});
    set(3, 0, {D, G}); set(3, 1, {D}); set(3, 2, {B}); set(3, 4, {C});
    set(4, 0, {F}); set(4, 1, {C, D}); set(4, 2, {A, B}); set(4, 3, {C});
    return rows;
}

inline ZVec ineq(std::initializer_list<Param> plus, std::initializer_list<Param> minus) {
    ZVec v(10, Int(0));
    for (Param p : plus) v[p] += 1;
    for (Param p : minus) v[p] -= 1;
    return v;
}

/// The strict inequality system of the open cone P (each row means > 0).
inline std::vector<ZVec> p_ineqs() {
    return {
        ineq({A}, {C}),          ineq({E}, {C}),          ineq({F}, {D, G}),
        ineq({B, D}, {H}),       ineq({H}, {G, I}),       ineq({C, D, G, I}, {A, B}),
        ineq({B, I}, {D, G}),    ineq({C, D, G}, {J}),    ineq({I, J}, {B, C}),
        ineq({C, J}, {D, G}),    ineq({G, J}, {D, E}),
    };
}

inline std::vector<ZVec> q_ineqs() {
    return {
        ineq({A}, {C}),          ineq({E}, {C}),          ineq({C, D, G}, {F}),
        ineq({C, F}, {D, G}),    ineq({F, G}, {C, D}),    ineq({H}, {D}),
        ineq({B, D}, {I}),       ineq({I}, {G, J}),       ineq({F, J}, {A, B}),
        ineq({B, J}, {D, G}),
    };
}

/// The substitution f -> j, h -> f - g, i -> h, j -> i, as the matrix
/// mapping new parameters to the old Q parameters.
inline std::vector<ZVec> substitution() {
    std::vector<ZVec> t(10, ZVec(10, Int(0)));
    for (Param p : {A, B, C, D, E, G}) t[p][p] = 1;
    t[F][J] = 1;              // f becomes j
    t[H][F] = 1; t[H][G] = -1;  // h becomes f - g
    t[I][H] = 1;              // i becomes h
    t[J][I] = 1;              // j becomes i
    return t;
}

inline ZVec apply_rows(const std::vector<ZVec>& rows, const ZVec& x) {
    ZVec out(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) out[r] = dot(rows[r], x);
    return out;
}

/// Composition row . T (functional pullback along the substitution).
inline ZVec pull_back(const ZVec& row, const std::vector<ZVec>& t) {
    ZVec out(10, Int(0));
    for (int old = 0; old < 10; ++old)
        for (int nw = 0; nw < 10; ++nw) out[nw] += row[old] * t[old][nw];
    return out;
}

}  // namespace pq

struct PqReport {
    bool spans_equal = false;
    bool substitution_matches = false;
    bool transformed_system_matches = false;
    int intersection_dim = 0;
    bool witness_found = false;
    ZVec p_point, q_point, mid_point;  // parameter vectors (P coordinates)
    int p_violated = -1, q_violated = -1;  // violated inequality indices at the midpoint
};

inline PqReport pq_example_check(uint64_t seed = 2024) {
    PqReport rep;
    auto P = pq::p_form();
    auto Q = pq::q_form();
    auto T = pq::substitution();

    // (a) equal linear spans in R^25 (column spaces of the two maps)
    auto columns = [](const std::vector<ZVec>& rows) {
        std::vector<ZVec> cols(10, ZVec(25, Int(0)));
        for (int r = 0; r < 25; ++r)
            for (int c = 0; c < 10; ++c) cols[c][r] = rows[r][c];
        return cols;
    };
    rep.spans_equal =
        rref_canonical(columns(P), 25) == rref_canonical(columns(Q), 25);

    // (b) Q composed with the substitution is exactly P
    rep.substitution_matches = true;
    for (int r = 0; r < 25; ++r)
        if (pq::pull_back(Q[r], T) != P[r]) rep.substitution_matches = false;

    // and the substituted inequality system is the displayed one
    std::vector<ZVec> q_transformed;
    for (const ZVec& w : pq::q_ineqs()) q_transformed.push_back(pq::pull_back(w, T));
    {
        using pq::ineq;
        using enum pq::Param;
        std::vector<ZVec> expected = {
            ineq({A}, {C}),       ineq({E}, {C}),       ineq({C, D, G}, {J}),
            ineq({C, J}, {D, G}), ineq({G, J}, {C, D}), ineq({F}, {D, G}),
            ineq({B, D}, {H}),    ineq({H}, {G, I}),    ineq({I, J}, {A, B}),
            ineq({B, I}, {D, G}),
        };
        auto sorted = [](std::vector<ZVec> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        rep.transformed_system_matches = sorted(q_transformed) == sorted(expected);
    }

    // (c) the joint system is strictly feasible, so P and Q intersect in a
    // full 10-dimensional subcone
    std::vector<ZVec> joint = pq::p_ineqs();
    joint.insert(joint.end(), q_transformed.begin(), q_transformed.end());
    std::vector<ZVec> with_orthant = joint;
    for (int i = 0; i < 10; ++i) {
        ZVec e(10, Int(0));
        e[i] = 1;
        with_orthant.push_back(e);
    }
    PolyCone both = cone_from_inequalities(10, with_orthant);
    rep.intersection_dim = both.dim;

    // (d) non-convexity witness: p in P, q in Q, with p + q violating both
    // strict systems
    auto region_samples = [&](const std::vector<ZVec>& sys, Rng& rng) {
        std::vector<ZVec> rows = sys;
        for (int i = 0; i < 10; ++i) {
            ZVec e(10, Int(0));
            e[i] = 1;
            rows.push_back(e);
        }
        PolyCone region = cone_from_inequalities(10, rows);
        ZVec pt(10, Int(0));
        for (const ZVec& r : region.rays) {
            long c = rand_int(rng, 0, 8);
            for (int i = 0; i < 10; ++i) pt[i] += Int(c) * r[i];
        }
        return pt;
    };
    auto strictly_satisfies = [](const std::vector<ZVec>& sys, const ZVec& x) {
        for (const ZVec& w : sys)
            if (dot(w, x) <= 0) return false;
        return true;
    };
    auto first_violated = [](const std::vector<ZVec>& sys, const ZVec& x) {
        for (size_t i = 0; i < sys.size(); ++i)
            if (dot(sys[i], x) <= 0) return int(i);
        return -1;
    };
    Rng rng(seed);
    auto p_sys = pq::p_ineqs();
    for (int attempt = 0; attempt < 100000 && !rep.witness_found; ++attempt) {
        ZVec p = region_samples(p_sys, rng);
        ZVec q = region_samples(q_transformed, rng);
        if (!strictly_satisfies(p_sys, p) || !strictly_satisfies(q_transformed, q)) continue;
        for (long lam = 1; lam <= 1024 && !rep.witness_found; lam *= 2) {
            ZVec m(10);
            for (int i = 0; i < 10; ++i) m[i] = p[i] + Int(lam) * q[i];
            int pv = first_violated(p_sys, m);
            int qv = first_violated(q_transformed, m);
            if (pv >= 0 && qv >= 0) {
                rep.witness_found = true;
                rep.p_point = p;
                ZVec ql(10);
                for (int i = 0; i < 10; ++i) ql[i] = Int(lam) * q[i];
                rep.q_point = ql;
                rep.mid_point = m;
                rep.p_violated = pv;
                rep.q_violated = qv;
            }
        }
    }
    return rep;
}

/// Matrix of the P family at a parameter point.
inline TropMatrix pq_matrix(const ZVec& params) {
    auto P = pq::p_form();
    TropMatrix m(5, TropScalar(0));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j) m.set(i, j, TropScalar(Rat(dot(P[i * 5 + j], params))));
    return m;
}

}  // namespace tropgossip
