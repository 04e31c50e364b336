// The ordinary gossip monoid G_n({0,inf}): bit-packed knowledge states,
// breadth-first enumeration with element lengths, the maximal-irredundant
// search, and pessimal call chains.
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_set>

#include "calls.hpp"

namespace tropgossip {

/// Knowledge state for n <= 9 gossipers.  Bit j*n+i is set iff gossiper j
/// knows gossip i (matrix entry (i,j) equal to 0).  Columns are contiguous
/// bit fields, so a call is two shifts and an OR.
struct GossipState {
    int n;
    unsigned __int128 bits;

    bool operator==(const GossipState& o) const { return n == o.n && bits == o.bits; }
    bool operator!=(const GossipState& o) const { return !(*this == o); }
    bool knows(int gossip, int gossiper) const {
        return (bits >> (gossiper * n + gossip)) & 1;
    }
};

inline GossipState identity_state(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("gossip state supports 1 <= n <= 9");
    unsigned __int128 b = 0;
    for (int j = 0; j < n; ++j) b |= (unsigned __int128)1 << (j * n + j);
    return {n, b};
}

inline GossipState all_known_state(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("gossip state supports 1 <= n <= 9");
    unsigned __int128 b = (n * n == 128) ? ~(unsigned __int128)0
                                         : (((unsigned __int128)1 << (n * n)) - 1);
    return {n, b};
}

/// One phone call: columns k and l both become their union.  Equals tropical
/// right-multiplication by C_kl(0) under the 0 <-> known encoding.
inline GossipState apply_call(const GossipState& s, int k, int l) {
    if (k == l) throw std::invalid_argument("call with equal endpoints");
    const int n = s.n;
    const unsigned __int128 colmask = ((unsigned __int128)1 << n) - 1;
    unsigned __int128 ck = (s.bits >> (k * n)) & colmask;
    unsigned __int128 cl = (s.bits >> (l * n)) & colmask;
    unsigned __int128 u = ck | cl;
    unsigned __int128 b = s.bits & ~((colmask << (k * n)) | (colmask << (l * n)));
    b |= (u << (k * n)) | (u << (l * n));
    return {n, b};
}

inline GossipState product_state(int n, const std::vector<std::pair<int, int>>& calls) {
    GossipState s = identity_state(n);
    for (auto [k, l] : calls) s = apply_call(s, k, l);
    return s;
}

/// Conversion to the {0,inf} tropical matrix (entry (i,j) zero iff j knows i).
inline TropMatrix state_to_matrix(const GossipState& s) {
    TropMatrix m(s.n, TropScalar::infinity());
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            if (s.knows(i, j)) m.set(i, j, TropScalar(0));
    return m;
}

inline GossipState matrix_to_state(const TropMatrix& m) {
    GossipState s{m.n(), 0};
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            if (m.at(i, j).is_finite()) s.bits |= (unsigned __int128)1 << (j * m.n() + i);
    return s;
}

struct EnumerationReport {
    int n = 0;
    unsigned long long total_count = 0;
    std::map<int, unsigned long long> length_histogram;
    int max_length = 0;
    bool complete = true;  // false when aborted on the memory budget
};

namespace detail {
inline std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> g;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) g.push_back({k, l});
    return g;
}

// Column-wise call application on a raw bit field; mirrors apply_call.
template <class Key>
inline Key apply_call_bits(int n, Key b, int k, int l) {
    const Key colmask = (Key(1) << n) - 1;
    Key u = ((b >> (k * n)) | (b >> (l * n))) & colmask;
    b &= ~((colmask << (k * n)) | (colmask << (l * n)));
    return b | (u << (k * n)) | (u << (l * n));
}

/// Sorted-run BFS over the right Cayley graph.  Successor keys are compacted
/// (sort + unique) in bounded batches, so peak memory stays near
/// sizeof(Key) * (|known| + batch).
template <class Key>
EnumerationReport enumerate_monoid_impl(int n, size_t memory_budget_bytes) {
    const auto gens = all_pairs(n);
    EnumerationReport rep;
    rep.n = n;

    std::vector<Key> known{Key(identity_state(n).bits)};
    std::vector<Key> frontier = known;
    rep.length_histogram[0] = 1;
    rep.total_count = 1;

    const size_t kBatch = size_t(64) << 20;  // keys per compaction batch
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        std::vector<Key> next;
        size_t compact_floor = 0;
        auto compact = [&] {
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            compact_floor = next.size();
        };
        for (Key b : frontier) {
            for (auto [k, l] : gens) {
                Key t = apply_call_bits(n, b, k, l);
                if (t != b) next.push_back(t);
            }
            if (next.size() >= compact_floor + kBatch) {
                compact();
                if ((known.size() + next.size() + frontier.size()) * sizeof(Key) >
                    memory_budget_bytes) {
                    rep.complete = false;
                    rep.max_length = level - 1;
                    return rep;
                }
            }
        }
        compact();
        std::vector<Key> fresh;
        fresh.reserve(next.size());
        std::set_difference(next.begin(), next.end(), known.begin(), known.end(),
                            std::back_inserter(fresh));
        if (fresh.empty()) break;
        if ((known.size() + fresh.size()) * sizeof(Key) * 2 > memory_budget_bytes) {
            rep.complete = false;
            rep.max_length = level - 1;
            return rep;
        }
        next.clear();
        next.shrink_to_fit();
        std::vector<Key> merged;
        merged.reserve(known.size() + fresh.size());
        std::merge(known.begin(), known.end(), fresh.begin(), fresh.end(),
                   std::back_inserter(merged));
        known.swap(merged);
        rep.length_histogram[level] = fresh.size();
        rep.total_count += fresh.size();
        rep.max_length = level;
        frontier.swap(fresh);
    }
    return rep;
}
}  // namespace detail

/// Breadth-first closure of {identity} under right multiplication by all
/// C(n,2) calls, with per-length counts.  States pack into 64 bits for
/// n <= 8.  memory_budget_bytes aborts the walk gracefully
/// (report.complete = false) once the footprint would pass the budget.
inline EnumerationReport enumerate_monoid(int n, size_t memory_budget_bytes = size_t(48) << 30) {
    identity_state(n);  // range check
    if (n <= 8) return detail::enumerate_monoid_impl<uint64_t>(n, memory_budget_bytes);
    return detail::enumerate_monoid_impl<unsigned __int128>(n, memory_budget_bytes);
}

/// BFS distance from the identity in the right Cayley graph, or nullopt if
/// the state is not an element of the monoid.
inline std::optional<int> element_length(const GossipState& target) {
    const int n = target.n;
    const auto gens = detail::all_pairs(n);
    if (target == identity_state(n)) return 0;
    std::vector<detail::Key> known{identity_state(n).bits};
    std::vector<detail::Key> frontier = known;
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        std::vector<detail::Key> next;
        for (detail::Key b : frontier) {
            GossipState s{n, b};
            for (auto [k, l] : gens) {
                detail::Key t = apply_call(s, k, l).bits;
                if (t == target.bits) return level;
                next.push_back(t);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<detail::Key> fresh;
        std::set_difference(next.begin(), next.end(), known.begin(), known.end(),
                            std::back_inserter(fresh));
        if (fresh.empty()) return std::nullopt;
        std::vector<detail::Key> merged;
        std::merge(known.begin(), known.end(), fresh.begin(), fresh.end(),
                   std::back_inserter(merged));
        known.swap(merged);
        frontier.swap(fresh);
    }
    return std::nullopt;
}

struct IrredundantSearchResult {
    int max_length = 0;
    std::vector<std::pair<int, int>> witness;  // a longest irredundant sequence
    unsigned long long nodes = 0;
};

/// Maximum length of an irredundant product of calls C_kl(0), by DFS over
/// irredundant prefixes (deleting a call from a prefix commutes with right
/// multiplication, so only irredundant prefixes can extend to irredundant
/// sequences).  Branches are pruned to lexicographically minimal
/// representatives under the Sym(n) relabelling action.
inline IrredundantSearchResult max_irredundant_length(int n) {
    const auto gens = detail::all_pairs(n);
    const int G = int(gens.size());

    // Permutations of [n] as maps on generator indices.
    std::vector<std::vector<int>> perm_on_pairs;
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            std::vector<int> map(G);
            bool ident = true;
            for (int g = 0; g < G; ++g) {
                int a = p[gens[g].first], b = p[gens[g].second];
                if (a > b) std::swap(a, b);
                int idx = 0;
                while (gens[idx] != std::make_pair(a, b)) ++idx;
                map[g] = idx;
                if (idx != g) ident = false;
            }
            if (!ident) perm_on_pairs.push_back(map);
        } while (std::next_permutation(p.begin(), p.end()));
    }

    IrredundantSearchResult res;
    std::vector<int> seq;
    std::vector<detail::Key> omitted;  // omitted[r] = product of seq without call r
    detail::Key full = identity_state(n).bits;
    std::vector<int> active(perm_on_pairs.size());
    std::iota(active.begin(), active.end(), 0);

    auto rec = [&](auto&& self, detail::Key prod, const std::vector<int>& act) -> void {
        ++res.nodes;
        if (int(seq.size()) > res.max_length) {
            res.max_length = int(seq.size());
            res.witness.clear();
            for (int g : seq) res.witness.push_back(gens[g]);
        }
        for (int c = 0; c < G; ++c) {
            bool pruned = false;
            for (int pi : act)
                if (perm_on_pairs[pi][c] < c) {
                    pruned = true;
                    break;
                }
            if (pruned) continue;
            GossipState s{n, prod};
            detail::Key nprod = apply_call(s, gens[c].first, gens[c].second).bits;
            if (nprod == prod) continue;  // the call itself is redundant
            bool ok = true;
            std::vector<detail::Key> nomit(seq.size() + 1);
            for (size_t r = 0; r < seq.size(); ++r) {
                GossipState o{n, omitted[r]};
                nomit[r] = apply_call(o, gens[c].first, gens[c].second).bits;
                if (nomit[r] == nprod) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            nomit[seq.size()] = prod;
            std::vector<int> nact;
            for (int pi : act)
                if (perm_on_pairs[pi][c] == c) nact.push_back(pi);
            seq.push_back(c);
            std::swap(omitted, nomit);
            self(self, nprod, nact);
            std::swap(omitted, nomit);
            seq.pop_back();
        }
    };
    rec(rec, full, active);
    return res;
}

/// The scenario where gossiper 0 phones i, i-1, ..., 1 for i = 1..n-1; a
/// pessimal chain of exactly C(n,2) calls.
inline std::vector<std::pair<int, int>> construct_pessimal(int n) {
    if (n < 2) throw std::invalid_argument("pessimal chain needs n >= 2");
    std::vector<std::pair<int, int>> calls;
    for (int i = 1; i < n; ++i)
        for (int j = i; j >= 1; --j) calls.push_back({0, j});
    return calls;
}

/// True iff every call in the simulated run teaches at least one participant
/// something new (equivalently, the two knowledge columns differ).
inline bool verify_pessimal(int n, const std::vector<std::pair<int, int>>& calls) {
    GossipState s = identity_state(n);
    for (auto [k, l] : calls) {
        GossipState t = apply_call(s, k, l);
        if (t == s) return false;
        s = t;
    }
    return true;
}

}  // namespace tropgossip
