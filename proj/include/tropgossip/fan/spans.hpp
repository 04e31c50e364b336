// Census of the linear spans swept out by k-fold products of call matrices:
// iterate all C(n,2)^k schemes, enumerate chambers, keep the image cones of
// full dimension C(n,2), and deduplicate their spans canonically.  For each
// span the inclusion-maximal image cone is identified (and verified to
// contain the others).
#pragma once

#include <atomic>
#include <map>
#include <thread>

#include "chambers.hpp"
#include "../geom/subspace.hpp"

namespace tropgossip {

struct ImageCone {
    PolyCone cone;
    uint32_t inf_entries = 0;
};

/// Image of a chamber region under its entrywise linear forms, as a cone in
/// R^(n x n).  Infinite entries are zeroed out and tracked by the mask.
inline ImageCone image_cone(const ProductScheme& s, const Chamber& ch) {
    const int n = s.n;
    std::vector<ZVec> gens;
    for (const ZVec& r : ch.region_rays) {
        ZVec v(n * n, Int(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || (ch.inf_entries & (uint32_t(1) << (i * n + j)))) continue;
                FormMask m = ch.choice[i * n + j];
                for (int t = 0; t < s.k(); ++t)
                    if (m & (FormMask(1) << t)) v[i * n + j] += r[t];
            }
        gens.push_back(std::move(v));
    }
    return {cone_from_generators(n * n, gens), ch.inf_entries};
}

struct SpanEntry {
    LinearSubspace span;
    std::vector<PolyCone> cones;  // distinct image cones with that span
    int maximal_index = -1;       // cone containing all others; -1 if none does
};

struct SpanCensus {
    int n = 0, k = 0;
    std::vector<SpanEntry> spans;           // sorted by canonical span key
    unsigned long long schemes_total = 0;   // all C(n,2)^k schemes
    unsigned long long schemes_used = 0;    // schemes that reached chamber search
    unsigned long long chambers_full = 0;   // full-dimensional image cones seen
};

namespace detail_span {

struct RawBuckets {
    // span key -> (rayset key -> image rays)
    std::map<std::string, std::map<std::string, std::vector<ZVec>>> buckets;
    unsigned long long used = 0, full = 0;

    void merge(RawBuckets&& other) {
        used += other.used;
        full += other.full;
        for (auto& [sk, inner] : other.buckets) {
            auto& mine = buckets[sk];
            for (auto& [ck, rays] : inner) mine.emplace(ck, std::move(rays));
        }
    }
};

inline std::string rayset_key(const std::vector<ZVec>& rays) {
    std::vector<std::string> parts;
    for (const ZVec& r : rays) {
        std::ostringstream os;
        for (const Int& x : r) os << x << ",";
        parts.push_back(os.str());
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (auto& p : parts) {
        out += p;
        out += ";";
    }
    return out;
}

inline void process_scheme(const ProductScheme& s, RawBuckets& rb) {
    const int n = s.n, k = s.k();
    // Adjacent equal calls merge into one parameter; no full-dimensional
    // image can arise.
    for (int t = 0; t + 1 < k; ++t)
        if (s.edges[t] == s.edges[t + 1]) return;
    // Every ordered entry needs at least one path, otherwise the image
    // carries an infinite entry and lies outside R^(n x n).
    std::vector<std::vector<FormMask>> antichains(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            auto forms = minimal_antichain(entry_path_forms(s, i, j));
            if (forms.empty()) return;
            antichains[i * n + j] = std::move(forms);
        }
    rb.used += 1;

    ChamberAnalysis ca = chambers(s);
    for (const Chamber& ch : ca.chambers) {
        // rank of the entrywise linear map
        std::vector<ZVec> cols(k, ZVec(n * n, Int(0)));
        for (int e = 0; e < n * n; ++e) {
            if (e / n == e % n) continue;
            FormMask m = ch.choice[e];
            for (int t = 0; t < k; ++t)
                if (m & (FormMask(1) << t)) cols[t][e] = 1;
        }
        if (rank_of(cols, n * n) != k) continue;
        rb.full += 1;

        std::vector<ZVec> rays;
        for (const ZVec& r : ch.region_rays) {
            ZVec v(n * n, Int(0));
            for (int e = 0; e < n * n; ++e) {
                if (e / n == e % n) continue;
                FormMask m = ch.choice[e];
                for (int t = 0; t < k; ++t)
                    if (m & (FormMask(1) << t)) v[e] += r[t];
            }
            make_primitive(v);
            rays.push_back(std::move(v));
        }
        std::sort(rays.begin(), rays.end());
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

        LinearSubspace span = make_subspace(n * n, cols);
        rb.buckets[span.key()].emplace(rayset_key(rays), rays);
    }
}

}  // namespace detail_span

inline SpanCensus enumerate_spans(int n, int k, int threads = 0) {
    SpanCensus out;
    out.n = n;
    out.k = k;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
    const unsigned long long P = pairs.size();
    unsigned long long total = 1;
    for (int t = 0; t < k; ++t) total *= P;
    out.schemes_total = total;

    unsigned nthreads = threads > 0 ? unsigned(threads) : std::thread::hardware_concurrency();
    nthreads = std::max(1u, std::min<unsigned>(nthreads, 64));
    std::vector<detail_span::RawBuckets> partial(nthreads);
    std::atomic<unsigned long long> cursor{0};
    auto work = [&](unsigned tid) {
        for (;;) {
            unsigned long long at = cursor.fetch_add(256);
            if (at >= total) return;
            unsigned long long hi = std::min(at + 256, total);
            for (unsigned long long code = at; code < hi; ++code) {
                ProductScheme s;
                s.n = n;
                unsigned long long c = code;
                for (int t = 0; t < k; ++t) {
                    s.edges.push_back(pairs[c % P]);
                    c /= P;
                }
                detail_span::process_scheme(s, partial[tid]);
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
    detail_span::RawBuckets all;
    for (auto& p : partial) all.merge(std::move(p));
    out.schemes_used = all.used;
    out.chambers_full = all.full;

    // Canonicalize the cones per span and locate the inclusion-maximal one.
    for (auto& [sk, inner] : all.buckets) {
        SpanEntry entry;
        std::map<std::string, PolyCone> canon;
        for (auto& [ck, rays] : inner) {
            PolyCone c = cone_from_generators(n * n, rays);
            canon.emplace(c.key(), std::move(c));
        }
        for (auto& [ck, c] : canon) entry.cones.push_back(std::move(c));
        entry.span = entry.cones.front().span();
        for (size_t i = 0; i < entry.cones.size() && entry.maximal_index < 0; ++i) {
            bool big = true;
            for (size_t j = 0; j < entry.cones.size() && big; ++j) {
                if (i == j) continue;
                for (const ZVec& r : entry.cones[j].rays)
                    if (!entry.cones[i].contains_point(r)) {
                        big = false;
                        break;
                    }
            }
            if (big) entry.maximal_index = int(i);
        }
        out.spans.push_back(std::move(entry));
    }
    std::sort(out.spans.begin(), out.spans.end(),
              [](const SpanEntry& a, const SpanEntry& b) { return a.span.key() < b.span.key(); });
    return out;
}

struct OrbitReport {
    std::vector<std::vector<int>> orbits;  // span indices per orbit
    std::vector<size_t> sizes;             // orbit sizes, ascending
};

/// Orbits of the spans under simultaneous row/column relabelling by Sym(n),
/// optionally extended by matrix transposition.
inline OrbitReport orbit_classify(const std::vector<LinearSubspace>& spans, int n,
                                  bool with_transpose) {
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    auto act = [&](const LinearSubspace& s, const std::vector<int>& p, bool transpose) {
        std::vector<ZVec> rows;
        for (const ZVec& r : s.basis) {
            ZVec img(n * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    int ii = p[i], jj = p[j];
                    if (transpose) std::swap(ii, jj);
                    img[ii * n + jj] = r[i * n + j];
                }
            rows.push_back(std::move(img));
        }
        return make_subspace(n * n, rows).key();
    };

    std::map<std::string, int> index_of;
    for (size_t i = 0; i < spans.size(); ++i) index_of[spans[i].key()] = int(i);

    OrbitReport rep;
    std::vector<bool> seen(spans.size(), false);
    for (size_t i = 0; i < spans.size(); ++i) {
        if (seen[i]) continue;
        std::set<int> orbit;
        for (const auto& p : perms)
            for (int tr = 0; tr <= (with_transpose ? 1 : 0); ++tr) {
                auto it = index_of.find(act(spans[i], p, tr == 1));
                if (it == index_of.end())
                    throw std::logic_error("span census is not closed under the group action");
                orbit.insert(it->second);
            }
        std::vector<int> o(orbit.begin(), orbit.end());
        for (int idx : o) seen[idx] = true;
        rep.sizes.push_back(o.size());
        rep.orbits.push_back(std::move(o));
    }
    std::sort(rep.sizes.begin(), rep.sizes.end());
    return rep;
}

}  // namespace tropgossip
