// Linearity regions of the piecewise-linear product map of a scheme.  A
// chamber fixes, for every matrix entry, which path form attains the
// minimum; its region is the subcone of the parameter orthant where those
// choices win.  Only full-dimensional regions are chambers.
#pragma once

#include "../geom/cone.hpp"
#include "scheme.hpp"

namespace tropgossip {

struct Chamber {
    // choice[i*n+j] = winning form mask for entry (i,j); meaningful only for
    // off-diagonal entries with at least one path.
    std::vector<FormMask> choice;
    uint32_t inf_entries = 0;        // bitmask over entry indices i*n+j that are infinite
    std::vector<ZVec> region_rays;   // extreme rays of the (full-dimensional) region
};

struct ChamberAnalysis {
    std::vector<std::vector<FormMask>> antichains;  // per entry index, pruned
    std::vector<Chamber> chambers;
};

inline ChamberAnalysis chambers(const ProductScheme& s) {
    const int n = s.n, k = s.k();
    ChamberAnalysis out;
    out.antichains.assign(n * n, {});
    uint32_t inf_entries = 0;
    std::vector<int> branch_entries;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            auto forms = minimal_antichain(entry_path_forms(s, i, j));
            if (forms.empty())
                inf_entries |= uint32_t(1) << (i * n + j);
            else if (forms.size() > 1)
                branch_entries.push_back(i * n + j);
            out.antichains[i * n + j] = std::move(forms);
        }
    std::sort(branch_entries.begin(), branch_entries.end(), [&](int a, int b) {
        return out.antichains[a].size() < out.antichains[b].size();
    });

    std::vector<FormMask> choice(n * n, 0);
    for (int e = 0; e < n * n; ++e)
        if (out.antichains[e].size() == 1) choice[e] = out.antichains[e][0];

    auto rec = [&](auto&& self, size_t level, const dd::OrthantSection& region) -> void {
        if (level == branch_entries.size()) {
            out.chambers.push_back({choice, inf_entries, region.rays()});
            return;
        }
        int e = branch_entries[level];
        for (FormMask f : out.antichains[e]) {
            dd::OrthantSection sub = region;
            ZVec fv = form_to_vec(f, k);
            bool alive = true;
            for (FormMask g : out.antichains[e]) {
                if (g == f) continue;
                ZVec diff = form_to_vec(g, k);
                for (int t = 0; t < k; ++t) diff[t] -= fv[t];
                sub.add(diff);
                if (sub.dim() < k) {
                    alive = false;
                    break;
                }
            }
            if (!alive) continue;
            choice[e] = f;
            self(self, level + 1, sub);
        }
        choice[e] = 0;
    };
    rec(rec, 0, dd::OrthantSection(k));
    return out;
}

}  // namespace tropgossip
