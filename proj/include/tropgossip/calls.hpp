// Sequences of lossy phone calls and the constructive generation lemmas:
// factoring a metric into calls, realizing a prescribed symmetric core, and
// the long irredundant products W_n.
#pragma once

#include <algorithm>

#include "matrix.hpp"

namespace tropgossip {

struct Call {
    int k, l;       // unordered pair, k != l
    TropScalar w;   // nonnegative weight; infinity acts as the identity call
};

struct CallSequence {
    int n = 0;
    std::vector<Call> calls;

    void push(int k, int l, TropScalar w) {
        if (k == l) throw std::invalid_argument("call with equal endpoints");
        calls.push_back({k, l, std::move(w)});
    }
};

inline TropMatrix product(const CallSequence& s) {
    TropMatrix p = TropMatrix::identity(s.n);
    for (const Call& c : s.calls) p = trop_mat_mul(p, phone_call_matrix(s.n, c.k, c.l, c.w));
    return p;
}

inline TropMatrix product_omitting(const CallSequence& s, size_t skip) {
    TropMatrix p = TropMatrix::identity(s.n);
    for (size_t t = 0; t < s.calls.size(); ++t) {
        if (t == skip) continue;
        const Call& c = s.calls[t];
        p = trop_mat_mul(p, phone_call_matrix(s.n, c.k, c.l, c.w));
    }
    return p;
}

/// True iff leaving out any single factor changes the product.
inline bool is_irredundant(const CallSequence& s) {
    TropMatrix full = product(s);
    for (size_t t = 0; t < s.calls.size(); ++t)
        if (product_omitting(s, t) == full) return false;
    return true;
}

/// Factor a matrix of the closed metric cone as the product of the
/// C(n,2) calls C_kl(a_kl), in lexicographic pair order.  The factorization
/// is checked by re-multiplication before returning.
inline CallSequence metric_as_calls(const TropMatrix& a) {
    if (!is_metric(a)) throw std::invalid_argument("metric_as_calls: input is not a metric matrix");
    CallSequence s;
    s.n = a.n();
    for (int k = 0; k < a.n(); ++k)
        for (int l = k + 1; l < a.n(); ++l) s.push(k, l, a.at(k, l));
    if (product(s) != a) throw std::logic_error("metric factorization failed to reproduce input");
    return s;
}

/// A call sequence whose product has symmetric core exactly the edge set of
/// the given connected graph.  Edges are swept in passes: first with weights
/// 1 + 2^-i, then with weights 2^((p-1)m+i) for pass p = 1, 2, ...; the
/// sweep stops at the first pass that leaves the product unchanged.
inline CallSequence core_witness(int n, const std::vector<std::pair<int, int>>& edges) {
    std::set<std::pair<int, int>> eset;
    for (auto [u, v] : edges) eset.insert({std::min(u, v), std::max(u, v)});
    if (!pairs_connected(n, eset)) throw std::invalid_argument("core_witness: graph is not connected");

    const int m = int(edges.size());
    CallSequence s;
    s.n = n;
    TropMatrix prod = TropMatrix::identity(n);
    auto apply_pass = [&](const std::vector<TropScalar>& w) {
        TropMatrix next = prod;
        for (int i = 0; i < m; ++i)
            next = trop_mat_mul(next, phone_call_matrix(n, edges[i].first, edges[i].second, w[i]));
        if (next == prod) return false;
        for (int i = 0; i < m; ++i) s.push(edges[i].first, edges[i].second, w[i]);
        prod = next;
        return true;
    };

    std::vector<TropScalar> w(m);
    for (int i = 0; i < m; ++i) w[i] = TropScalar(Rat(1) + Rat(1, Int(1) << (i + 1)));
    apply_pass(w);
    for (int pass = 1;; ++pass) {
        for (int i = 0; i < m; ++i) w[i] = TropScalar(Rat(Int(1) << ((pass - 1) * m + i + 1)));
        if (!apply_pass(w)) break;
    }
    return s;
}

/// The irredundant product W_n with binomial(n+1,3) factors:
/// W_n = W_{n-1} (shifted off index 0) * P_{n-1} * ... * P_1 with
/// P_h = C_{0,1} C_{1,2} ... C_{h-1,h}.  Weights of the recursive part are
/// rescaled affinely into (1,2); the weights of P_h are the powers
/// 2^(16h+i), i = 1..h, so that every block dominates the sum of all
/// earlier ones.
inline CallSequence build_W(int n) {
    CallSequence s;
    s.n = std::max(n, 1);
    if (n <= 1) return s;

    CallSequence inner = build_W(n - 1);
    // Largest weight in inner is below 2^(17(n-2)+1); squeeze into (1,2).
    Rat scale = Rat(1, Int(1) << (17 * (n - 2) + 2));
    for (const Call& c : inner.calls) {
        Rat w = Rat(1) + c.w.value() * scale;
        s.push(c.k + 1, c.l + 1, TropScalar(w));
    }
    for (int h = n - 1; h >= 1; --h)
        for (int i = 1; i <= h; ++i)
            s.push(i - 1, i, TropScalar(Rat(Int(1) << (16 * h + i))));
    return s;
}

}  // namespace tropgossip
