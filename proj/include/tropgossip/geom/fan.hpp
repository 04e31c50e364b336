// Verification that a family of pointed cones forms a polyhedral fan, with
// the f-vector of the induced face complex.  Checking pairwise intersections
// of the maximal cones suffices: once those are common faces, intersections
// of lower faces are faces of the common face, hence common faces themselves.
#pragma once

#include <atomic>
#include <thread>

#include "faces.hpp"

namespace tropgossip {

struct FanCheckResult {
    bool is_fan = true;
    std::vector<size_t> f_vector;                     // face counts, dims 1..maxdim
    std::vector<std::pair<size_t, size_t>> witnesses; // offending cone index pairs
    std::vector<std::vector<int>> pairwise_dim;       // dim of each pairwise intersection
};

namespace detail_fan {

/// Is f (an intersection computed inside c) a face of c?
inline bool is_face_of(const PolyCone& f, const PolyCone& c) {
    if (f.dim == 0) return true;  // the origin is a face of every pointed cone
    // Facets of c tight on all of f
    std::vector<const ZVec*> tight;
    for (const ZVec& n : c.facets) {
        bool all = true;
        for (const ZVec& r : f.rays)
            if (dot(n, r) != 0) {
                all = false;
                break;
            }
        if (all) tight.push_back(&n);
    }
    // Rays of c lying on every such facet give the smallest face containing f
    std::vector<ZVec> face_rays;
    for (const ZVec& r : c.rays) {
        bool on = true;
        for (const ZVec* n : tight)
            if (dot(*n, r) != 0) {
                on = false;
                break;
            }
        if (on) face_rays.push_back(r);
    }
    std::sort(face_rays.begin(), face_rays.end());
    return face_rays == f.rays;
}

}  // namespace detail_fan

inline FanCheckResult fan_check(const std::vector<PolyCone>& cones, int threads = 0) {
    FanCheckResult res;
    if (cones.empty()) return res;
    const int ambient = cones[0].ambient;
    int maxdim = 0;
    for (const PolyCone& c : cones) {
        if (c.ambient != ambient) throw std::invalid_argument("fan_check: ambient mismatch");
        if (!c.is_pointed()) throw std::invalid_argument("fan_check: cones must be pointed");
        maxdim = std::max(maxdim, c.dim);
    }

    // f-vector: all faces of all cones, deduplicated by canonical ray sets.
    std::set<std::string> seen_faces;
    res.f_vector.assign(maxdim, 0);
    for (const PolyCone& c : cones) {
        for (const std::vector<int>& ids : face_raysets(c)) {
            std::vector<ZVec> gens;
            for (int i : ids) gens.push_back(c.rays[i]);
            std::sort(gens.begin(), gens.end());
            std::ostringstream os;
            for (const ZVec& g : gens) {
                for (const Int& x : g) os << x << ",";
                os << ";";
            }
            if (seen_faces.insert(os.str()).second)
                res.f_vector[rank_of(gens, ambient) - 1] += 1;
        }
    }

    const size_t n = cones.size();
    res.pairwise_dim.assign(n, std::vector<int>(n, 0));
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});

    unsigned nthreads = threads > 0 ? unsigned(threads) : std::thread::hardware_concurrency();
    nthreads = std::max(1u, std::min<unsigned>(nthreads, 64));
    std::vector<std::vector<std::pair<size_t, size_t>>> bad(nthreads);
    std::vector<std::thread> pool;
    std::atomic<size_t> cursor{0};
    auto work = [&](unsigned tid) {
        for (;;) {
            size_t at = cursor.fetch_add(64);
            if (at >= pairs.size()) return;
            size_t hi = std::min(at + 64, pairs.size());
            for (size_t t = at; t < hi; ++t) {
                auto [i, j] = pairs[t];
                PolyCone inter = intersect(cones[i], cones[j]);
                res.pairwise_dim[i][j] = res.pairwise_dim[j][i] = inter.dim;
                if (!detail_fan::is_face_of(inter, cones[i]) ||
                    !detail_fan::is_face_of(inter, cones[j]))
                    bad[tid].push_back({i, j});
            }
        }
    };
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
    for (auto& b : bad) res.witnesses.insert(res.witnesses.end(), b.begin(), b.end());
    std::sort(res.witnesses.begin(), res.witnesses.end());
    res.is_fan = res.witnesses.empty();
    return res;
}

/// Connectivity of the dual graph whose edges join maximal cones meeting in
/// codimension one.
inline bool codim1_connected(const FanCheckResult& fc, int topdim) {
    const size_t n = fc.pairwise_dim.size();
    if (n == 0) return true;
    std::vector<int> comp(n, -1);
    std::vector<size_t> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (size_t u = 0; u < n; ++u)
            if (comp[u] < 0 && fc.pairwise_dim[v][u] == topdim - 1) {
                comp[u] = 0;
                stack.push_back(u);
            }
    }
    for (size_t v = 0; v < n; ++v)
        if (comp[v] < 0) return false;
    return true;
}

}  // namespace tropgossip
