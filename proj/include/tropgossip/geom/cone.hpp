// Polyhedral cones in double description: primitive integer rays and facet
// normals, plus span equations, all in canonical form so that equal cones
// compare equal bytewise.  The conversion core is the double description
// method with lexicographic insertion order and the rank-based adjacency
// test.
#pragma once

#include <boost/dynamic_bitset.hpp>
#include <sstream>

#include "subspace.hpp"

namespace tropgossip {

namespace dd {

using Bits = boost::dynamic_bitset<>;

/// One double description step: intersect the cone (rays, per-ray tight sets
/// over `rows`) with {y : a . y >= 0}.  Adjacency of a positive/negative ray
/// pair is decided by the rank of their common tight rows.
inline void insert_inequality(int m, std::vector<ZVec>& rows, std::vector<ZVec>& rays,
                              std::vector<Bits>& tight, const ZVec& a) {
    const size_t idx = rows.size();
    rows.push_back(a);
    for (Bits& t : tight) t.resize(idx + 1);

    std::vector<Int> sign(rays.size());
    bool has_neg = false;
    for (size_t r = 0; r < rays.size(); ++r) {
        sign[r] = dot(a, rays[r]);
        if (sign[r] < 0) has_neg = true;
    }
    if (!has_neg) {
        for (size_t r = 0; r < rays.size(); ++r)
            if (sign[r] == 0) tight[r].set(idx);
        return;
    }
    auto adjacent = [&](const Bits& za, const Bits& zb) {
        Bits z = za & zb;
        std::vector<ZVec> sub;
        for (size_t i = z.find_first(); i != Bits::npos; i = z.find_next(i))
            sub.push_back(rows[i]);
        return rank_of(sub, m) == m - 2;
    };
    std::vector<ZVec> nrays;
    std::vector<Bits> ntight;
    for (size_t r = 0; r < rays.size(); ++r)
        if (sign[r] >= 0) {
            nrays.push_back(rays[r]);
            Bits t = tight[r];
            if (sign[r] == 0) t.set(idx);
            ntight.push_back(std::move(t));
        }
    for (size_t p = 0; p < rays.size(); ++p) {
        if (sign[p] <= 0) continue;
        for (size_t q = 0; q < rays.size(); ++q) {
            if (sign[q] >= 0) continue;
            if (!adjacent(tight[p], tight[q])) continue;
            ZVec w(m);
            for (int t = 0; t < m; ++t) w[t] = sign[p] * rays[q][t] - sign[q] * rays[p][t];
            make_primitive(w);
            Bits t = tight[p] & tight[q];
            t.set(idx);
            nrays.push_back(std::move(w));
            ntight.push_back(std::move(t));
        }
    }
    rays.swap(nrays);
    tight.swap(ntight);
}

/// Extreme rays of {y in R^m : row . y >= 0 for all rows}.  Requires the
/// cone to be pointed, i.e. rank(rows) == m; rows may contain implicit
/// equalities.  Rows are processed in lexicographic order.
inline std::vector<ZVec> pointed_rays(int m, std::vector<ZVec> input) {
    if (m == 0) return {};
    std::sort(input.begin(), input.end());
    input.erase(std::unique(input.begin(), input.end()), input.end());

    // Initial simplicial cone from the lexicographically first independent
    // subset; its rays are the columns of the (scaled) inverse.
    std::vector<int> init;
    {
        std::vector<ZVec> picked;
        for (size_t i = 0; i < input.size() && int(init.size()) < m; ++i) {
            picked.push_back(input[i]);
            if (rank_of(picked, m) == int(init.size()) + 1)
                init.push_back(int(i));
            else
                picked.pop_back();
        }
        if (int(init.size()) < m)
            throw std::invalid_argument("double description: cone is not pointed");
    }

    std::vector<ZVec> rays(m);
    {
        // Solve A0 X = I by Gauss-Jordan over rationals, column by column.
        std::vector<QVec> a(m, QVec(2 * m, Rat(0)));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) a[i][j] = Rat(input[init[i]][j]);
            a[i][m + i] = 1;
        }
        for (int col = 0; col < m; ++col) {
            int p = col;
            while (a[p][col] == 0) ++p;
            std::swap(a[col], a[p]);
            Rat pv = a[col][col];
            for (int j = 0; j < 2 * m; ++j) a[col][j] /= pv;
            for (int r = 0; r < m; ++r)
                if (r != col && a[r][col] != 0) {
                    Rat f = a[r][col];
                    for (int j = 0; j < 2 * m; ++j) a[r][j] -= f * a[col][j];
                }
        }
        for (int j = 0; j < m; ++j) {
            QVec col(m);
            for (int i = 0; i < m; ++i) col[i] = a[i][m + j];
            rays[j] = clear_denominators(col);
        }
    }

    std::vector<ZVec> rows;
    std::vector<Bits> tight(m, Bits(m));
    for (int i : init) rows.push_back(input[i]);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            if (dot(rows[i], rays[j]) == 0) tight[j].set(i);

    std::set<int> used(init.begin(), init.end());
    for (size_t i = 0; i < input.size(); ++i) {
        if (used.count(int(i))) continue;
        insert_inequality(m, rows, rays, tight, input[i]);
    }
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

/// Incremental double description state for sections of the nonnegative
/// orthant: starts at R^m_{>=0} and narrows one inequality at a time.
/// Copyable, for push/pop style search.
class OrthantSection {
public:
    explicit OrthantSection(int m) : m_(m) {
        for (int i = 0; i < m; ++i) {
            ZVec e(m, Int(0));
            e[i] = 1;
            rows_.push_back(e);
            rays_.push_back(e);
        }
        tight_.assign(m, Bits(m));
        for (int r = 0; r < m; ++r)
            for (int i = 0; i < m; ++i)
                if (i != r) tight_[r].set(i);
    }

    void add(const ZVec& a) { insert_inequality(m_, rows_, rays_, tight_, a); }
    const std::vector<ZVec>& rays() const { return rays_; }
    int dim() const { return rank_of(rays_, m_); }

private:
    int m_;
    std::vector<ZVec> rows_;
    std::vector<ZVec> rays_;
    std::vector<Bits> tight_;
};

}  // namespace dd

struct PolyCone {
    int ambient = 0;
    int dim = 0;
    std::vector<ZVec> rays;       // primitive extreme rays, sorted
    std::vector<ZVec> lineality;  // canonical RREF basis
    std::vector<ZVec> facets;     // primitive normals, sorted; irredundant modulo equations
    std::vector<ZVec> equations;  // canonical RREF basis of the span's complement

    bool operator==(const PolyCone& o) const {
        return ambient == o.ambient && rays == o.rays && lineality == o.lineality;
    }

    std::string key() const {
        std::ostringstream os;
        os << ambient << "|";
        for (const ZVec& r : rays) {
            for (const Int& x : r) os << x << ",";
            os << ";";
        }
        os << "|";
        for (const ZVec& r : lineality) {
            for (const Int& x : r) os << x << ",";
            os << ";";
        }
        return os.str();
    }

    bool is_pointed() const { return lineality.empty(); }

    LinearSubspace span() const {
        std::vector<ZVec> gens = rays;
        gens.insert(gens.end(), lineality.begin(), lineality.end());
        return make_subspace(ambient, gens);
    }

    bool contains_point(const ZVec& x) const {
        if (int(x.size()) != ambient) throw std::invalid_argument("contains_point: dimension mismatch");
        for (const ZVec& e : equations)
            if (dot(e, x) != 0) return false;
        for (const ZVec& f : facets)
            if (dot(f, x) < 0) return false;
        return true;
    }

    bool contains_point(const QVec& x) const {
        if (int(x.size()) != ambient) throw std::invalid_argument("contains_point: dimension mismatch");
        for (const ZVec& e : equations)
            if (dot_q(e, x) != 0) return false;
        for (const ZVec& f : facets)
            if (dot_q(f, x) < 0) return false;
        return true;
    }
};

namespace detail_cone {

// Restriction of the functional a to the span with RREF basis b: the i-th
// coordinate is a . b_i.
inline ZVec restrict_functional(const ZVec& a, const std::vector<ZVec>& basis) {
    ZVec out(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) out[i] = dot(a, basis[i]);
    return out;
}

inline ZVec lift_point(const ZVec& y, const std::vector<ZVec>& basis, int ambient) {
    ZVec x(ambient, Int(0));
    for (size_t i = 0; i < basis.size(); ++i)
        for (int j = 0; j < ambient; ++j) x[j] += y[i] * basis[i][j];
    make_primitive(x);
    return x;
}

}  // namespace detail_cone

/// Cone spanned by the given rays (plus an optional lineality part).  Both
/// descriptions are computed; facet normals are canonical representatives
/// supported on the pivot columns of the span basis, made orthogonal to the
/// lineality part.
inline PolyCone cone_from_generators(int ambient, const std::vector<ZVec>& gens_in,
                                     const std::vector<ZVec>& lin_in = {}) {
    PolyCone c;
    c.ambient = ambient;

    std::vector<ZVec> gens;
    for (const ZVec& g : gens_in) {
        if (int(g.size()) != ambient) throw std::invalid_argument("generator dimension mismatch");
        if (!is_zero(g)) {
            gens.push_back(g);
            make_primitive(gens.back());
        }
    }
    std::vector<ZVec> span_rows = gens;
    span_rows.insert(span_rows.end(), lin_in.begin(), lin_in.end());
    std::vector<ZVec> span_basis = rref_canonical(span_rows, ambient);
    const int k = int(span_basis.size());
    c.dim = k;
    c.equations = kernel_basis(span_basis, ambient);
    c.lineality = rref_canonical(lin_in, ambient);
    if (k == 0) return c;

    std::vector<int> span_pivots;
    for (const ZVec& row : span_basis) {
        int pc = 0;
        while (row[pc] == 0) ++pc;
        span_pivots.push_back(pc);
    }
    // Work in the coordinates y_i = x[pivot_i]; this is the image of the
    // true basis coordinates under a positive diagonal scaling (the integer
    // RREF pivots), which preserves all cone combinatorics.  Lifting back
    // must undo that scaling.
    auto point_coords = [&](const ZVec& x) {
        ZVec y(k);
        for (int i = 0; i < k; ++i) y[i] = x[span_pivots[i]];
        return y;
    };
    auto lift_y = [&](const ZVec& y) {
        QVec x(ambient, Rat(0));
        for (int i = 0; i < k; ++i) {
            if (y[i] == 0) continue;
            Rat f(y[i], span_basis[i][span_pivots[i]]);
            for (int j = 0; j < ambient; ++j) x[j] += f * Rat(span_basis[i][j]);
        }
        return clear_denominators(x);
    };

    const std::vector<ZVec> lin_y_basis = rref_canonical(
        [&] {
            std::vector<ZVec> v;
            for (const ZVec& l : c.lineality) v.push_back(point_coords(l));
            return v;
        }(),
        k);
    std::vector<int> lin_pivots;
    for (const ZVec& row : lin_y_basis) {
        int pc = 0;
        while (row[pc] == 0) ++pc;
        lin_pivots.push_back(pc);
    }
    std::vector<bool> is_lin_pivot(k, false);
    for (int p : lin_pivots) is_lin_pivot[p] = true;
    const int m = k - int(lin_y_basis.size());
    std::vector<int> free_coords;
    for (int i = 0; i < k; ++i)
        if (!is_lin_pivot[i]) free_coords.push_back(i);

    // Reduce generators modulo lineality (clear the lineality pivot coords),
    // then drop those coordinates; the result is a pointed cone in R^m.
    auto reduce_mod_lin = [&](ZVec y) {
        for (size_t r = 0; r < lin_y_basis.size(); ++r) {
            int pc = lin_pivots[r];
            if (y[pc] == 0) continue;
            Int a = lin_y_basis[r][pc], b = y[pc];
            for (int i = 0; i < k; ++i) y[i] = y[i] * a - lin_y_basis[r][i] * b;
            make_primitive(y);
        }
        ZVec z(m);
        for (int i = 0; i < m; ++i) z[i] = y[free_coords[i]];
        return z;
    };

    std::vector<ZVec> gens_z;
    for (const ZVec& g : gens) {
        ZVec z = reduce_mod_lin(point_coords(g));
        if (!is_zero(z)) {
            make_primitive(z);
            gens_z.push_back(std::move(z));
        }
    }
    std::sort(gens_z.begin(), gens_z.end());
    gens_z.erase(std::unique(gens_z.begin(), gens_z.end()), gens_z.end());

    // Facets of the full-dimensional pointed cone in R^m are the extreme
    // rays of its dual cone.
    std::vector<ZVec> facets_z = gens_z.empty() ? std::vector<ZVec>{}
                                                : dd::pointed_rays(m, gens_z);

    // Keep only extreme generators: tight facets must have rank m-1.
    std::vector<ZVec> extreme_z;
    for (const ZVec& g : gens_z) {
        std::vector<ZVec> tight;
        for (const ZVec& f : facets_z)
            if (dot(f, g) == 0) tight.push_back(f);
        if (rank_of(tight, m) == m - 1) extreme_z.push_back(g);
    }

    // Lift rays back: place free coordinates (lineality pivots stay zero),
    // then expand through the span basis.
    for (const ZVec& z : extreme_z) {
        ZVec y(k, Int(0));
        for (int i = 0; i < m; ++i) y[free_coords[i]] = z[i];
        c.rays.push_back(lift_y(y));
    }
    std::sort(c.rays.begin(), c.rays.end());

    // Lift facet normals: the coordinate functional at span pivot i equals
    // y_i on the span, so supporting the normal on the free pivots
    // reproduces the reduced functional; corrections at lineality pivots
    // make it vanish on the lineality part.
    for (const ZVec& f : facets_z) {
        QVec n(ambient, Rat(0));
        for (int i = 0; i < m; ++i) n[span_pivots[free_coords[i]]] = Rat(f[i]);
        for (size_t r = 0; r < lin_y_basis.size(); ++r) {
            ZVec lx = lift_y(lin_y_basis[r]);
            Rat v = dot_q(lx, n);
            if (v != 0) {
                int pc = span_pivots[lin_pivots[r]];
                n[pc] -= v / Rat(lx[pc]);
            }
        }
        c.facets.push_back(clear_denominators(n));
    }
    std::sort(c.facets.begin(), c.facets.end());
    return c;
}

/// Cone {x : normal . x >= 0, equation . x = 0}.  The result is fully
/// canonicalized through cone_from_generators.
inline PolyCone cone_from_inequalities(int ambient, const std::vector<ZVec>& normals,
                                       const std::vector<ZVec>& equations = {}) {
    for (const ZVec& v : normals)
        if (int(v.size()) != ambient) throw std::invalid_argument("normal dimension mismatch");
    // Solution space of the equations
    std::vector<ZVec> w_basis = kernel_basis(equations, ambient);
    const int s = int(w_basis.size());
    std::vector<ZVec> rows_y;
    for (const ZVec& a : normals) {
        ZVec r = detail_cone::restrict_functional(a, w_basis);
        if (!is_zero(r)) {
            make_primitive(r);
            rows_y.push_back(std::move(r));
        }
    }
    // Lineality inside the solution space, and the pointed quotient.
    std::vector<ZVec> lin_y = kernel_basis(rows_y, s);
    std::vector<int> lin_pivots;
    std::vector<bool> is_lp(s, false);
    for (const ZVec& row : lin_y) {
        int pc = 0;
        while (row[pc] == 0) ++pc;
        lin_pivots.push_back(pc);
        is_lp[pc] = true;
    }
    const int m = s - int(lin_y.size());
    std::vector<int> free_coords;
    for (int i = 0; i < s; ++i)
        if (!is_lp[i]) free_coords.push_back(i);
    std::vector<ZVec> rows_u;
    for (const ZVec& r : rows_y) {
        ZVec u(m);
        for (int i = 0; i < m; ++i) u[i] = r[free_coords[i]];
        rows_u.push_back(std::move(u));
    }
    std::vector<ZVec> rays_u = m == 0 ? std::vector<ZVec>{} : dd::pointed_rays(m, rows_u);

    std::vector<ZVec> rays_x, lin_x;
    for (const ZVec& u : rays_u) {
        ZVec y(s, Int(0));
        for (int i = 0; i < m; ++i) y[free_coords[i]] = u[i];
        rays_x.push_back(detail_cone::lift_point(y, w_basis, ambient));
    }
    for (const ZVec& l : lin_y) lin_x.push_back(detail_cone::lift_point(l, w_basis, ambient));
    return cone_from_generators(ambient, rays_x, lin_x);
}

inline PolyCone intersect(const PolyCone& a, const PolyCone& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("intersect: ambient mismatch");
    std::vector<ZVec> eqs = a.equations;
    eqs.insert(eqs.end(), b.equations.begin(), b.equations.end());
    std::vector<ZVec> ineqs = a.facets;
    ineqs.insert(ineqs.end(), b.facets.begin(), b.facets.end());
    return cone_from_inequalities(a.ambient, ineqs, eqs);
}

}  // namespace tropgossip
