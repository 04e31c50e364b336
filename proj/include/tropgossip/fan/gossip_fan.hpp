// The polyhedral fan carried by the lossy gossip monoid for n = 2, 3, 4:
// maximal cones from the span census, fan verification, exact membership
// tests and multiplicative closure sampling.
#pragma once

#include "../geom/fan.hpp"
#include "../rng.hpp"
#include "spans.hpp"

namespace tropgossip {

struct GossipFan {
    int n = 0;
    SpanCensus census;
    std::vector<PolyCone> maximal;  // one inclusion-maximal cone per span
    FanCheckResult check;
    bool is_pure = false;
    bool codim1_connected_flag = false;
    bool metric_cone_present = false;  // D_n appears among the maximal cones
};

/// Span of the symmetric zero-diagonal matrices, the ambient space of D_n.
inline LinearSubspace metric_cone_span(int n) {
    std::vector<ZVec> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ZVec v(n * n, Int(0));
            v[i * n + j] = 1;
            v[j * n + i] = 1;
            rows.push_back(std::move(v));
        }
    return make_subspace(n * n, rows);
}

/// The metric cone D_n as a PolyCone: symmetric, zero diagonal, all triangle
/// inequalities.
inline PolyCone metric_cone(int n) {
    std::vector<ZVec> eqs;
    std::vector<ZVec> ineqs;
    for (int i = 0; i < n; ++i) {
        ZVec d(n * n, Int(0));
        d[i * n + i] = 1;
        eqs.push_back(std::move(d));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ZVec sym(n * n, Int(0));
            sym[i * n + j] = 1;
            sym[j * n + i] = -1;
            eqs.push_back(std::move(sym));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            ZVec nn(n * n, Int(0));
            nn[i * n + j] = 1;
            ineqs.push_back(std::move(nn));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int m = 0; m < n; ++m) {
                if (i == j || j == m || i == m) continue;
                ZVec tri(n * n, Int(0));
                tri[i * n + j] += 1;
                tri[j * n + m] += 1;
                tri[i * n + m] -= 1;
                ineqs.push_back(std::move(tri));
            }
    return cone_from_inequalities(n * n, ineqs, eqs);
}

inline GossipFan gossip_fan(int n, int threads = 0) {
    if (n < 2 || n > 4) throw std::invalid_argument("gossip_fan supports n = 2, 3, 4");
    GossipFan fan;
    fan.n = n;
    const int k = n * (n - 1) / 2;
    fan.census = enumerate_spans(n, k, threads);
    std::string metric_key = metric_cone_span(n).key();
    for (const SpanEntry& e : fan.census.spans) {
        if (e.maximal_index < 0)
            throw std::logic_error("no inclusion-maximal cone for a span; unexpected for n <= 4");
        fan.maximal.push_back(e.cones[e.maximal_index]);
        if (e.span.key() == metric_key) fan.metric_cone_present = true;
    }
    fan.check = fan_check(fan.maximal, threads);
    fan.is_pure = true;
    for (const PolyCone& c : fan.maximal)
        if (c.dim != k) fan.is_pure = false;
    fan.codim1_connected_flag = codim1_connected(fan.check, k);
    return fan;
}

/// Exact membership in the support of the fan, with an int64 fast path (the
/// cone data and the tested points stay far below the overflow range; this
/// is checked when the structure is built).
class FanMembership {
public:
    explicit FanMembership(const std::vector<PolyCone>& cones) {
        if (cones.empty()) throw std::invalid_argument("empty fan");
        ambient_ = cones[0].ambient;
        for (const PolyCone& c : cones) {
            CompiledCone cc;
            for (const ZVec& e : c.equations) cc.eqs.push_back(to_ll(e));
            for (const ZVec& f : c.facets) cc.ineqs.push_back(to_ll(f));
            cones_.push_back(std::move(cc));
        }
    }

    /// Index of some maximal cone containing the matrix, or -1.
    int locate(const TropMatrix& a) const {
        const int n = a.n();
        if (n * n != ambient_) throw std::invalid_argument("membership: dimension mismatch");
        Int den = 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (a.at(i, j).is_inf()) return -1;
                den = boost::multiprecision::lcm(den, denominator(a.at(i, j).value()));
            }
        std::vector<long long> num(ambient_);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int v = numerator(a.at(i, j).value()) * (den / denominator(a.at(i, j).value()));
                num[i * n + j] = checked_ll(v);
            }
        for (size_t c = 0; c < cones_.size(); ++c) {
            bool ok = true;
            for (const auto& e : cones_[c].eqs)
                if (dot_ll(e, num) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (const auto& f : cones_[c].ineqs)
                if (dot_ll(f, num) < 0) {
                    ok = false;
                    break;
                }
            if (ok) return int(c);
        }
        return -1;
    }

    bool contains(const TropMatrix& a) const { return locate(a) >= 0; }

private:
    struct CompiledCone {
        std::vector<std::vector<long long>> eqs, ineqs;
    };
    int ambient_ = 0;
    std::vector<CompiledCone> cones_;

    static long long checked_ll(const Int& v) {
        if (v > Int(1) << 56 || v < -(Int(1) << 56))
            throw std::overflow_error("fan membership: value outside the int64 fast path");
        return v.convert_to<long long>();
    }
    static std::vector<long long> to_ll(const ZVec& v) {
        std::vector<long long> out(v.size());
        for (size_t i = 0; i < v.size(); ++i) out[i] = checked_ll(v[i]);
        return out;
    }
    static long long dot_ll(const std::vector<long long>& a, const std::vector<long long>& b) {
        __int128 s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += __int128(a[i]) * b[i];
        if (s > ((__int128)1 << 100) || s < -((__int128)1 << 100))
            throw std::overflow_error("fan membership: dot product overflow");
        return s > 0 ? 1 : (s < 0 ? -1 : 0);
    }
};

struct ClosureReport {
    int n = 0;
    int trials = 0;
    int failures = 0;
    std::vector<TropMatrix> failed_products;
};

/// Sample random rational points of random maximal cones, multiply by random
/// lossy calls on both sides, and verify the products stay in the fan.
inline ClosureReport closure_sample_check(const GossipFan& fan, int trials, uint64_t seed) {
    ClosureReport rep;
    rep.n = fan.n;
    rep.trials = trials;
    FanMembership member(fan.maximal);
    Rng rng(seed);
    const int n = fan.n;
    for (int t = 0; t < trials; ++t) {
        const PolyCone& cone = fan.maximal[rand_below(rng, fan.maximal.size())];
        QVec pt(n * n, Rat(0));
        bool nonzero = false;
        for (const ZVec& r : cone.rays) {
            Rat c = rand_rat(rng, 0, 6, 3);
            if (c != 0) nonzero = true;
            for (int e = 0; e < n * n; ++e) pt[e] += c * Rat(r[e]);
        }
        if (!nonzero && !cone.rays.empty())
            for (int e = 0; e < n * n; ++e) pt[e] += Rat(cone.rays[0][e]);
        TropMatrix a(n, TropScalar(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) a.set(i, j, TropScalar(pt[i * n + j]));
        int k = int(rand_below(rng, n)), l = int(rand_below(rng, n));
        if (k == l) l = (l + 1) % n;
        TropMatrix call = phone_call_matrix(n, std::min(k, l), std::max(k, l),
                                            TropScalar(rand_rat(rng, 0, 15, 3)));
        for (const TropMatrix& prod : {trop_mat_mul(call, a), trop_mat_mul(a, call)}) {
            if (!member.contains(prod)) {
                rep.failures += 1;
                if (rep.failed_products.size() < 5) rep.failed_products.push_back(prod);
            }
        }
    }
    return rep;
}

}  // namespace tropgossip
