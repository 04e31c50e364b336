// Exact integer/rational linear algebra on small dense matrices: primitive
// normalization, canonical reduced row echelon forms, ranks and kernels.
// Vectors are integer-cleared throughout so that equality is byte equality.
#pragma once

#include <algorithm>
#include <vector>

#include "../rational.hpp"

namespace tropgossip {

using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int dot(const ZVec& a, const ZVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot_q(const ZVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline bool is_zero(const ZVec& a) {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

/// Divide by the gcd of the entries.  Rays keep their orientation; basis
/// rows and functionals can additionally be sign-fixed by the caller.
inline void make_primitive(ZVec& a) {
    Int g = 0;
    for (const Int& x : a) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (Int& x : a) x /= g;
}

/// Clear denominators of a rational vector into a primitive integer vector.
inline ZVec clear_denominators(const QVec& a) {
    Int lcm = 1;
    for (const Rat& x : a) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    ZVec v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = numerator(a[i]) * (lcm / denominator(a[i]));
    make_primitive(v);
    return v;
}

/// Canonical reduced row echelon form of the row space: integer rows,
/// primitive, positive pivots, sorted by pivot column.  Two row sets span
/// the same subspace iff their canonical forms are identical.
inline std::vector<ZVec> rref_canonical(const std::vector<ZVec>& rows, int ambient) {
    std::vector<QVec> work;
    for (const ZVec& r : rows) {
        QVec q(ambient);
        for (int i = 0; i < ambient; ++i) q[i] = Rat(r[i]);
        work.push_back(std::move(q));
    }
    std::vector<std::pair<int, QVec>> reduced;  // (pivot column, row with pivot 1)
    for (QVec& row : work) {
        for (auto& [pc, prow] : reduced)
            if (row[pc] != 0) {
                Rat f = row[pc];
                for (int i = 0; i < ambient; ++i) row[i] -= f * prow[i];
            }
        int pc = -1;
        for (int i = 0; i < ambient; ++i)
            if (row[i] != 0) {
                pc = i;
                break;
            }
        if (pc < 0) continue;
        Rat p = row[pc];
        for (int i = 0; i < ambient; ++i) row[i] /= p;
        for (auto& [opc, orow] : reduced)
            if (orow[pc] != 0) {
                Rat f = orow[pc];
                for (int i = 0; i < ambient; ++i) orow[i] -= f * row[i];
            }
        reduced.push_back({pc, row});
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ZVec> out;
    for (auto& [pc, row] : reduced) out.push_back(clear_denominators(row));
    return out;
}

inline int rank_of(const std::vector<ZVec>& rows, int ambient) {
    // Fraction-free elimination on a working copy.
    std::vector<ZVec> w;
    for (const ZVec& r : rows)
        if (!is_zero(r)) w.push_back(r);
    int rank = 0;
    for (int col = 0; col < ambient && rank < int(w.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < int(w.size()); ++r)
            if (w[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(w[rank], w[pivot]);
        for (int r = rank + 1; r < int(w.size()); ++r)
            if (w[r][col] != 0) {
                Int a = w[rank][col], b = w[r][col];
                for (int i = col; i < ambient; ++i) w[r][i] = w[r][i] * a - w[rank][i] * b;
                make_primitive(w[r]);
            }
        ++rank;
    }
    return rank;
}

/// Canonical basis of {x : row . x = 0 for every row}.
inline std::vector<ZVec> kernel_basis(const std::vector<ZVec>& rows, int ambient) {
    std::vector<ZVec> rref = rref_canonical(rows, ambient);
    std::vector<int> pivot_col(rref.size());
    std::vector<bool> is_pivot(ambient, false);
    for (size_t r = 0; r < rref.size(); ++r) {
        int pc = 0;
        while (rref[r][pc] == 0) ++pc;
        pivot_col[r] = pc;
        is_pivot[pc] = true;
    }
    std::vector<ZVec> out;
    for (int f = 0; f < ambient; ++f) {
        if (is_pivot[f]) continue;
        QVec v(ambient, Rat(0));
        v[f] = 1;
        for (size_t r = 0; r < rref.size(); ++r)
            v[pivot_col[r]] = -Rat(rref[r][f], rref[r][pivot_col[r]]);
        out.push_back(clear_denominators(v));
    }
    return rref_canonical(out, ambient);
}

/// Remainder of v after reduction by canonical RREF rows; zero iff v lies in
/// their row space.
inline bool in_row_space(const std::vector<ZVec>& rref, const ZVec& v, int ambient) {
    QVec w(ambient);
    for (int i = 0; i < ambient; ++i) w[i] = Rat(v[i]);
    for (const ZVec& row : rref) {
        int pc = 0;
        while (row[pc] == 0) ++pc;
        if (w[pc] != 0) {
            Rat f = w[pc] / Rat(row[pc]);
            for (int i = 0; i < ambient; ++i) w[i] -= f * Rat(row[i]);
        }
    }
    for (const Rat& x : w)
        if (x != 0) return false;
    return true;
}

}  // namespace tropgossip
