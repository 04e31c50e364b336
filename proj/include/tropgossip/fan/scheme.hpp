// Parameterized products of call matrices: a scheme fixes the sequence of
// call pairs, and each matrix entry of the product becomes the minimum of
// 0/1 linear forms in the call weights, one form per index-increasing
// simple path.
#pragma once

#include <cstdint>

#include "../matrix.hpp"
#include "../geom/linalg.hpp"

namespace tropgossip {

/// A linear form with coefficients in {0,1}: the set of scheme positions a
/// path walks through, as a bitmask.
using FormMask = uint32_t;

struct ProductScheme {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // unordered pairs, repetitions allowed

    int k() const { return int(edges.size()); }
};

/// All index-increasing simple paths from i to j through the edge sequence,
/// as position masks.  An empty result encodes an infinite entry.
inline std::vector<FormMask> entry_path_forms(const ProductScheme& s, int i, int j) {
    if (i == j) throw std::invalid_argument("entry_path_forms: diagonal entry");
    std::vector<FormMask> out;
    const int k = s.k();
    std::vector<bool> visited(s.n, false);
    visited[i] = true;
    auto rec = [&](auto&& self, int at, int from_pos, FormMask mask) -> void {
        for (int t = from_pos; t < k; ++t) {
            auto [a, b] = s.edges[t];
            if (a != at && b != at) continue;
            int other = a == at ? b : a;
            if (visited[other]) continue;
            if (other == j) {
                out.push_back(mask | (FormMask(1) << t));
                continue;
            }
            visited[other] = true;
            self(self, other, t + 1, mask | (FormMask(1) << t));
            visited[other] = false;
        }
    };
    rec(rec, i, 0, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Forms that can attain the entry minimum on a full-dimensional region:
/// drop any form whose support contains another form's support.
inline std::vector<FormMask> minimal_antichain(std::vector<FormMask> forms) {
    std::vector<FormMask> keep;
    for (FormMask f : forms) {
        bool dominated = false;
        for (FormMask g : forms)
            if (g != f && (g & f) == g) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(f);
    }
    return keep;
}

inline ZVec form_to_vec(FormMask f, int k) {
    ZVec v(k, Int(0));
    for (int t = 0; t < k; ++t)
        if (f & (FormMask(1) << t)) v[t] = 1;
    return v;
}

/// Evaluate the product of the scheme at exact weights, through the matrix
/// semantics (used as the oracle against the symbolic forms).
inline TropMatrix scheme_product(const ProductScheme& s, const std::vector<TropScalar>& w) {
    TropMatrix p = TropMatrix::identity(s.n);
    for (int t = 0; t < s.k(); ++t)
        p = trop_mat_mul(p, phone_call_matrix(s.n, s.edges[t].first, s.edges[t].second, w[t]));
    return p;
}

}  // namespace tropgossip
