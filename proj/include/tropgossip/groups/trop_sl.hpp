// Tropical determinant and membership in the tropicalization of SL_n, with
// the additive-group counterexample showing tropicalized groups need not be
// monoids.
#pragma once

#include "../matrix.hpp"
#include "../rng.hpp"

namespace tropgossip {

struct TdetResult {
    TropScalar value;
    long multiplicity = 0;  // number of permutations attaining the minimum
};

/// Minimum over permutations of the diagonal sum, with its multiplicity.
/// Exhaustive scan; intended for n <= 6.
inline TdetResult tdet(const TropMatrix& a) {
    const int n = a.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    TdetResult res{TropScalar::infinity(), 0};
    do {
        TropScalar s(0);
        for (int i = 0; i < n; ++i) s = trop_mul(s, a.at(i, perm[i]));
        if (s < res.value) {
            res.value = s;
            res.multiplicity = 1;
        } else if (s == res.value) {
            res.multiplicity += 1;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return res;
}

/// Membership in Trop(SL_n): the tropical determinant is zero, or negative
/// and attained by at least two permutations.  (Equivalently, min over the
/// determinant terms and the constant 0 is attained at least twice.)
inline bool in_trop_sl(const TropMatrix& a) {
    TdetResult d = tdet(a);
    if (d.value == TropScalar(0)) return true;
    return d.value < TropScalar(0) && d.multiplicity >= 2;
}

struct SlClosureReport {
    int n = 0;
    int trials = 0;
    int failures = 0;
    unsigned long long samples_drawn = 0;
};

/// Rejection-sample members of Trop(SL_n) from a small integer grid (with a
/// sprinkling of infinities) and verify the tropical product stays inside.
inline SlClosureReport sl_closure_check(int n, int trials, uint64_t seed) {
    SlClosureReport rep;
    rep.n = n;
    rep.trials = trials;
    Rng rng(seed);
    auto sample_member = [&]() {
        for (;;) {
            rep.samples_drawn += 1;
            TropMatrix m(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    m.set(i, j, rand_chance(rng, 1, 8) ? TropScalar::infinity()
                                                       : TropScalar(rand_int(rng, -2, 2)));
            if (in_trop_sl(m)) return m;
        }
    };
    for (int t = 0; t < trials; ++t) {
        TropMatrix a = sample_member(), b = sample_member();
        if (!in_trop_sl(trop_mat_mul(a, b))) rep.failures += 1;
    }
    return rep;
}

struct AdditiveCounterexample {
    TropMatrix product;
    bool is_member = false;  // lies in the one-parameter tropicalized family
};

/// The tropicalized additive group of 4x4 matrices: members look like the
/// matrix below for a single parameter; the product of two members picks up
/// a finite (1,4)-entry a+b and escapes the family whenever a, b are finite.
inline TropMatrix additive_family_matrix(const TropScalar& a) {
    TropMatrix m = TropMatrix::identity(4);
    m.set(0, 1, a);
    m.set(0, 2, a);
    m.set(1, 3, a);
    m.set(2, 3, a);
    return m;
}

inline AdditiveCounterexample additive_counterexample(const TropScalar& a, const TropScalar& b) {
    TropMatrix prod = trop_mat_mul(additive_family_matrix(a), additive_family_matrix(b));
    // verify the displayed shape
    TropScalar m = trop_add(a, b);
    TropMatrix expect = TropMatrix::identity(4);
    expect.set(0, 1, m);
    expect.set(0, 2, m);
    expect.set(1, 3, m);
    expect.set(2, 3, m);
    expect.set(0, 3, trop_mul(a, b));
    if (prod != expect) throw std::logic_error("additive counterexample: unexpected product");
    AdditiveCounterexample out{prod, false};
    out.is_member = prod == additive_family_matrix(m);
    return out;
}

}  // namespace tropgossip
