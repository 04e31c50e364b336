// Linear subspaces of R^d with a canonical encoding: equal subspaces have
// byte-identical bases.
#pragma once

#include <sstream>

#include "linalg.hpp"

namespace tropgossip {

struct LinearSubspace {
    int ambient = 0;
    std::vector<ZVec> basis;  // canonical integer RREF rows

    int dim() const { return int(basis.size()); }
    bool operator==(const LinearSubspace& o) const {
        return ambient == o.ambient && basis == o.basis;
    }
    bool contains(const ZVec& v) const { return in_row_space(basis, v, ambient); }

    /// Serialized canonical form, usable as a dedup key.
    std::string key() const {
        std::ostringstream os;
        os << ambient << ";";
        for (const ZVec& row : basis) {
            for (const Int& x : row) os << x << ",";
            os << ";";
        }
        return os.str();
    }
};

inline LinearSubspace make_subspace(int ambient, const std::vector<ZVec>& spanning) {
    return {ambient, rref_canonical(spanning, ambient)};
}

inline LinearSubspace subspace_intersection(const LinearSubspace& a, const LinearSubspace& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("subspace intersection: ambient mismatch");
    std::vector<ZVec> constraints = kernel_basis(a.basis, a.ambient);
    std::vector<ZVec> cb = kernel_basis(b.basis, b.ambient);
    constraints.insert(constraints.end(), cb.begin(), cb.end());
    return {a.ambient, kernel_basis(constraints, a.ambient)};
}

}  // namespace tropgossip
