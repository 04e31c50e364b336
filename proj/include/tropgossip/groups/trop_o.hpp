// Tropicalized orthogonal groups: the three cones of Trop(O_2), the
// prevariety cut out by the orthonormality quadrics and det-1 for O_3, and
// the classification of its nonnegative part as Sym(3).G_3.
#pragma once

#include "trop_sl.hpp"

namespace tropgossip {

enum class O2Cone { kGossip, kColumnsSwapped, kNegativeDiagonal, kOutside };

/// Trop(O_2) is the union of three cones: [[0,a],[a,0]] with a in [0,inf],
/// the same with columns reversed, and [[a,a],[a,a]] with a <= 0.
inline O2Cone o2_classify(const TropMatrix& m) {
    if (m.n() != 2) throw std::invalid_argument("o2_classify expects a 2x2 matrix");
    const TropScalar &x = m.at(0, 0), &y = m.at(0, 1), &u = m.at(1, 0), &v = m.at(1, 1);
    TropScalar zero(0);
    if (x == zero && v == zero && y == u && (y.is_inf() || y.value() >= 0)) return O2Cone::kGossip;
    if (y == zero && u == zero && x == v && (x.is_inf() || x.value() >= 0))
        return O2Cone::kColumnsSwapped;
    if (x == y && y == u && u == v && x.is_finite() && x.value() <= 0)
        return O2Cone::kNegativeDiagonal;
    return O2Cone::kOutside;
}

struct TropEquationResidue {
    std::string name;
    bool satisfied = false;   // minimum attained at least twice
    TropScalar min_value;
    int attained = 0;
};

struct PrevarietyReport {
    bool satisfied = true;
    std::vector<TropEquationResidue> residues;
};

namespace detail_o3 {

// A tropical polynomial here is a list of named terms, each a multiset of
// matrix positions (the term's tropical value is the sum of those entries);
// an empty position list is the constant with valuation 0.
struct Term {
    std::vector<std::pair<int, int>> positions;
};

inline TropScalar eval_term(const TropMatrix& m, const Term& t) {
    TropScalar s(0);
    for (auto [i, j] : t.positions) s = trop_mul(s, m.at(i, j));
    return s;
}

inline TropEquationResidue check_equation(const TropMatrix& m, const std::string& name,
                                          const std::vector<Term>& terms) {
    TropEquationResidue r;
    r.name = name;
    r.min_value = TropScalar::infinity();
    for (const Term& t : terms) r.min_value = trop_add(r.min_value, eval_term(m, t));
    for (const Term& t : terms)
        if (eval_term(m, t) == r.min_value) r.attained += 1;
    r.satisfied = r.attained >= 2;
    return r;
}

}  // namespace detail_o3

/// Tropicalizations of the equations generating the ideal of O_3: row and
/// column orthonormality quadrics and det - 1, generated symbolically.  Each
/// minimum must be attained at least twice.
inline PrevarietyReport o3_prevariety_check(const TropMatrix& m) {
    if (m.n() != 3) throw std::invalid_argument("o3_prevariety_check expects a 3x3 matrix");
    using detail_o3::Term;
    PrevarietyReport rep;
    auto push = [&](const std::string& name, const std::vector<Term>& terms) {
        rep.residues.push_back(detail_o3::check_equation(m, name, terms));
        rep.satisfied = rep.satisfied && rep.residues.back().satisfied;
    };
    // column j . column k (j < k): sum_i x_ij x_ik = 0
    for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k) {
            std::vector<Term> terms;
            for (int i = 0; i < 3; ++i) terms.push_back({{{i, j}, {i, k}}});
            push("col" + std::to_string(j) + ".col" + std::to_string(k), terms);
        }
    // row i . row k (i < k)
    for (int i = 0; i < 3; ++i)
        for (int k = i + 1; k < 3; ++k) {
            std::vector<Term> terms;
            for (int j = 0; j < 3; ++j) terms.push_back({{{i, j}, {k, j}}});
            push("row" + std::to_string(i) + ".row" + std::to_string(k), terms);
        }
    // unit column norms: sum_i x_ij^2 - 1
    for (int j = 0; j < 3; ++j) {
        std::vector<Term> terms;
        for (int i = 0; i < 3; ++i) terms.push_back({{{i, j}, {i, j}}});
        terms.push_back({});  // the constant 1, valuation 0
        push("col" + std::to_string(j) + ".norm", terms);
    }
    for (int i = 0; i < 3; ++i) {
        std::vector<Term> terms;
        for (int j = 0; j < 3; ++j) terms.push_back({{{i, j}, {i, j}}});
        terms.push_back({});
        push("row" + std::to_string(i) + ".norm", terms);
    }
    // det - 1: all six permutation terms and the constant
    {
        std::vector<Term> terms;
        std::vector<int> p{0, 1, 2};
        do {
            Term t;
            for (int i = 0; i < 3; ++i) t.positions.push_back({i, p[i]});
            terms.push_back(t);
        } while (std::next_permutation(p.begin(), p.end()));
        terms.push_back({});
        push("det", terms);
    }
    return rep;
}

enum class O3Class { kMetric, kAsymmetric, kUnclassifiable };

struct O3Classification {
    bool in_sym3_g3 = false;
    O3Class cone = O3Class::kUnclassifiable;
    std::vector<int> row_permutation;  // rows of the input, reordered by this, classify
    std::vector<int> relabelling;      // conjugation used for the asymmetric form
};

namespace detail_o3 {

inline TropMatrix permute_rows(const TropMatrix& m, const std::vector<int>& p) {
    TropMatrix out(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) out.set(i, j, m.at(p[i], j));
    return out;
}

inline TropMatrix conjugate(const TropMatrix& m, const std::vector<int>& p) {
    TropMatrix out(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) out.set(p[i], p[j], m.at(i, j));
    return out;
}

// [[0,a,b],[b+c,0,c],[b,c,0]] with a >= b+c: the asymmetric maximal cone of
// G_3 (up to relabelling), as derived from the perpendicularity residues.
inline bool matches_asymmetric_cone(const TropMatrix& m) {
    const TropScalar &a = m.at(0, 1), &b = m.at(0, 2), &c = m.at(1, 2);
    if (m.at(1, 0) != trop_mul(b, c)) return false;
    if (m.at(2, 0) != b || m.at(2, 1) != c) return false;
    return a >= trop_mul(b, c);
}

}  // namespace detail_o3

/// Classification of a nonnegative matrix satisfying the O_3 prevariety
/// equations: some row permutation puts zeros on the diagonal, after which
/// the matrix is either a metric or, up to conjugation, the displayed
/// asymmetric cone.  Failure to classify would falsify the containment of
/// the nonnegative prevariety in Sym(3).G_3.
inline O3Classification o3_nonneg_classify(const TropMatrix& m) {
    if (m.n() != 3) throw std::invalid_argument("o3_nonneg_classify expects a 3x3 matrix");
    if (!is_nonnegative(m)) throw std::invalid_argument("o3_nonneg_classify expects entries in [0,inf]");
    O3Classification out;
    std::vector<int> p{0, 1, 2};
    do {
        TropMatrix zd = detail_o3::permute_rows(m, p);
        if (!has_zero_diagonal(zd)) continue;
        if (is_metric(zd)) {
            out.in_sym3_g3 = true;
            out.cone = O3Class::kMetric;
            out.row_permutation = p;
            out.relabelling = {0, 1, 2};
            return out;
        }
        std::vector<int> q{0, 1, 2};
        do {
            if (detail_o3::matches_asymmetric_cone(detail_o3::conjugate(zd, q))) {
                out.in_sym3_g3 = true;
                out.cone = O3Class::kAsymmetric;
                out.row_permutation = p;
                out.relabelling = q;
                return out;
            }
        } while (std::next_permutation(q.begin(), q.end()));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace tropgossip
