// Square matrices over the min-plus semiring, with the operations used by
// the lossy gossip monoid: tropical product, call matrices, Kleene star,
// metric-cone membership and the symmetric core.
#pragma once

#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "tropical.hpp"

namespace tropgossip {

/// Dense n-by-n matrix of TropScalar.  Value type; all operations below are
/// pure and return fresh matrices, so shared instances are safe across
/// threads.  Indices are 0-based throughout the C++ API.
class TropMatrix {
public:
    explicit TropMatrix(int n, TropScalar fill = TropScalar(0)) : n_(n), e_(size_t(n) * n, fill) {
        if (n <= 0) throw std::invalid_argument("matrix dimension must be positive");
    }

    static TropMatrix identity(int n) {
        TropMatrix m(n, TropScalar::infinity());
        for (int i = 0; i < n; ++i) m.set(i, i, TropScalar(0));
        return m;
    }

    /// The all-zero matrix J0 (full knowledge / zero distances).
    static TropMatrix all_zero(int n) { return TropMatrix(n, TropScalar(0)); }

    int n() const { return n_; }
    const TropScalar& at(int i, int j) const { return e_[size_t(i) * n_ + j]; }
    void set(int i, int j, TropScalar v) { e_[size_t(i) * n_ + j] = std::move(v); }

    bool operator==(const TropMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const TropMatrix& o) const { return !(*this == o); }

private:
    int n_;
    std::vector<TropScalar> e_;
};

inline TropMatrix trop_mat_mul(const TropMatrix& a, const TropMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("tropical product: dimension mismatch");
    const int n = a.n();
    TropMatrix c(n, TropScalar::infinity());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            TropScalar best = TropScalar::infinity();
            for (int m = 0; m < n; ++m) best = trop_add(best, trop_mul(a.at(i, m), b.at(m, j)));
            c.set(i, j, best);
        }
    return c;
}

inline TropMatrix transpose(const TropMatrix& a) {
    TropMatrix t(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) t.set(j, i, a.at(i, j));
    return t;
}

/// Lossy phone call matrix C_kl(a): zero diagonal, weight a at (k,l) and
/// (l,k), infinity elsewhere.  a = infinity gives the tropical identity.
inline TropMatrix phone_call_matrix(int n, int k, int l, const TropScalar& a) {
    if (k == l) throw std::invalid_argument("phone call requires two distinct gossipers");
    if (k < 0 || l < 0 || k >= n || l >= n) throw std::invalid_argument("call index out of range");
    if (a.is_finite() && a.value() < 0) throw std::invalid_argument("call weight must be nonnegative");
    TropMatrix c = TropMatrix::identity(n);
    c.set(k, l, a);
    c.set(l, k, a);
    return c;
}

inline bool has_zero_diagonal(const TropMatrix& a) {
    for (int i = 0; i < a.n(); ++i)
        if (!(a.at(i, i) == TropScalar(0))) return false;
    return true;
}

inline bool is_nonnegative(const TropMatrix& a) {
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) {
            const TropScalar& t = a.at(i, j);
            if (t.is_finite() && t.value() < 0) return false;
        }
    return true;
}

/// Kleene star A* = (I + A)^(n-1): entrywise shortest-path closure.
/// Requires nonnegative entries and zero diagonal.
inline TropMatrix kleene_star(const TropMatrix& a) {
    if (!is_nonnegative(a)) throw std::invalid_argument("kleene star: negative entry");
    if (!has_zero_diagonal(a)) throw std::invalid_argument("kleene star: nonzero diagonal");
    const int n = a.n();
    TropMatrix base(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) base.set(i, j, i == j ? TropScalar(0) : a.at(i, j));
    TropMatrix star = n >= 2 ? base : TropMatrix::identity(n);
    for (int p = 2; p < n; ++p) star = trop_mat_mul(star, base);
    return star;
}

/// Membership in the closed metric cone: zero diagonal, symmetric, and all
/// triangle inequalities (infinity-aware).
inline bool is_metric(const TropMatrix& a) {
    const int n = a.n();
    if (!has_zero_diagonal(a) || !is_nonnegative(a)) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a.at(i, j) != a.at(j, i)) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (trop_mul(a.at(i, j), a.at(j, k)) < a.at(i, k)) return false;
    return true;
}

/// Unordered pairs {i,j} with a_ij = a_ji.  For elements of the lossy gossip
/// monoid these pairs span a connected graph with at least n-1 edges.
inline std::set<std::pair<int, int>> symmetric_core(const TropMatrix& a) {
    std::set<std::pair<int, int>> core;
    for (int i = 0; i < a.n(); ++i)
        for (int j = i + 1; j < a.n(); ++j)
            if (a.at(i, j) == a.at(j, i)) core.insert({i, j});
    return core;
}

/// True iff the pair set covers [n] with a connected graph.
inline bool pairs_connected(int n, const std::set<std::pair<int, int>>& edges) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& [u, v] : edges) parent[find(u)] = find(v);
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

inline std::string to_string(const TropMatrix& a) {
    std::ostringstream os;
    for (int i = 0; i < a.n(); ++i) {
        for (int j = 0; j < a.n(); ++j) {
            if (j) os << ",";
            os << to_string(a.at(i, j));
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace tropgossip
