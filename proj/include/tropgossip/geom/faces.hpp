// Face lattices of pointed cones via ray/facet incidence.
#pragma once

#include <map>

#include "cone.hpp"

namespace tropgossip {

/// Ray index sets of all nonzero faces (the cone itself included), from the
/// closure of facet-tightening.  Cone must be pointed.
inline std::vector<std::vector<int>> face_raysets(const PolyCone& c) {
    if (!c.is_pointed()) throw std::invalid_argument("face enumeration requires a pointed cone");
    const int nr = int(c.rays.size());
    const int nf = int(c.facets.size());
    std::vector<boost::dynamic_bitset<>> inc(nf, boost::dynamic_bitset<>(nr));
    for (int f = 0; f < nf; ++f)
        for (int r = 0; r < nr; ++r)
            if (dot(c.facets[f], c.rays[r]) == 0) inc[f].set(r);

    std::set<boost::dynamic_bitset<>> seen;
    std::vector<boost::dynamic_bitset<>> queue;
    boost::dynamic_bitset<> top(nr);
    top.set();
    if (nr > 0) {
        seen.insert(top);
        queue.push_back(top);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        boost::dynamic_bitset<> cur = queue[qi];
        for (int f = 0; f < nf; ++f) {
            boost::dynamic_bitset<> child = cur & inc[f];
            if (child.none()) continue;
            if (seen.insert(child).second) queue.push_back(child);
        }
    }
    std::vector<std::vector<int>> out;
    for (const auto& bits : seen) {
        std::vector<int> ids;
        for (size_t i = bits.find_first(); i != boost::dynamic_bitset<>::npos; i = bits.find_next(i))
            ids.push_back(int(i));
        out.push_back(std::move(ids));
    }
    return out;
}

/// All nonzero faces grouped by dimension 1..dim(c), each as a PolyCone.
inline std::vector<std::vector<PolyCone>> face_poset(const PolyCone& c) {
    std::vector<std::vector<PolyCone>> by_dim(c.dim);
    for (const std::vector<int>& ids : face_raysets(c)) {
        std::vector<ZVec> gens;
        for (int i : ids) gens.push_back(c.rays[i]);
        PolyCone f = cone_from_generators(c.ambient, gens);
        by_dim.at(f.dim - 1).push_back(std::move(f));
    }
    return by_dim;
}

}  // namespace tropgossip
