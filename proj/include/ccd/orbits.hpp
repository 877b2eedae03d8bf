// Automorphisms and their action on cocycles; exhaustive automorphism
// enumeration and Grassmannian orbit partitioning over small prime fields.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "extensions.hpp"

namespace ccd {

template <class F>
Vec<F> mat_col(const Mat<F>& m, int j) {
    Vec<F> v(m.rows);
    for (int i = 0; i < m.rows; ++i) v[i] = m.at(i, j);
    return v;
}

/// phi is an automorphism iff it is invertible and phi(e_i e_j) = phi(e_i) phi(e_j).
template <class F>
bool is_automorphism(const Algebra<F>& A, const Mat<F>& phi) {
    if (phi.rows != A.n || phi.cols != A.n) throw dimension_mismatch("is_automorphism: shape");
    if (!is_invertible(phi)) return false;
    for (int i = 0; i < A.n; ++i)
        for (int j = i; j < A.n; ++j) {
            Vec<F> lhs = phi.apply(A.prod(i, j));
            Vec<F> rhs = multiply(A, mat_col(phi, i), mat_col(phi, j));
            if (!vec_is_zero(A.f, vec_sub(A.f, lhs, rhs))) return false;
        }
    return true;
}

/// Pullback phi theta (x,y) = theta(phi x, phi y); Gram matrix phi^T G phi.
template <class F>
Cocycle<F> act_on_cocycle(const Algebra<F>& A, const Mat<F>& phi, const Cocycle<F>& theta) {
    if (!is_automorphism(A, phi))
        throw std::invalid_argument("act_on_cocycle: phi is not an automorphism");
    Cocycle<F> out;
    Mat<F> pt = phi.transpose();
    for (auto& comp : theta.components)
        out.components.push_back(BilinearForm<F>::from_gram(A.f, pt * comp.gram() * phi));
    return out;
}

template <class F>
BilinearForm<F> pullback_form(const F& f, const Mat<F>& phi, const BilinearForm<F>& b) {
    return BilinearForm<F>::from_gram(f, phi.transpose() * b.gram() * phi);
}

// phi applied to prod(i,j) when only the first `cols` columns are set; the
// caller guarantees the product is supported on those coordinates.
inline Vec<GFpField> phi_apply_prefix(const Algebra<GFpField>& A, const Mat<GFpField>& phi,
                                      int i, int j, int cols) {
    const GFpField& f = A.f;
    Vec<GFpField> out(A.n, 0);
    const Vec<GFpField>& c = A.prod(i, j);
    for (int k = 0; k < cols; ++k)
        if (!f.is_zero(c[k]))
            for (int r = 0; r < A.n; ++r) out[r] = f.add(out[r], f.mul(c[k], phi.at(r, k)));
    return out;
}

/// All automorphisms of a small algebra over GF(p), by depth-first search over
/// matrix columns with independence pruning and early product checks.
/// Guards: n <= 4 for p in {2,3}; n <= 3 for p in {5,7}.
inline std::vector<Mat<GFpField>> enumerate_automorphisms(const Algebra<GFpField>& A) {
    const GFpField& f = A.f;
    const int n = A.n;
    bool ok = (n <= 4 && (f.p == 2 || f.p == 3)) || (n <= 3 && (f.p == 5 || f.p == 7));
    if (!ok) throw guard_exceeded("enumerate_automorphisms: size guard (n,p)");

    // product check (i,j) becomes decidable once columns 0..ready-1 are set
    struct Check { int i, j, ready; };
    std::vector<Check> checks;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int ready = std::max(i, j);
            for (int k = 0; k < n; ++k)
                if (!f.is_zero(A.prod(i, j)[k])) ready = std::max(ready, k);
            checks.push_back({i, j, ready + 1});
        }

    std::vector<Mat<GFpField>> result;
    Mat<GFpField> phi(f, n, n);
    std::vector<Vec<GFpField>> reduced; // row-reduced copies of chosen columns

    auto independent_after_adding = [&](const Vec<GFpField>& col) {
        Vec<GFpField> v = col;
        for (auto& r : reduced) {
            int lead = -1;
            for (int k = 0; k < n; ++k)
                if (!f.is_zero(r[k])) { lead = k; break; }
            if (lead >= 0 && !f.is_zero(v[lead])) {
                auto c = f.div(v[lead], r[lead]);
                for (int k = 0; k < n; ++k) v[k] = f.sub(v[k], f.mul(c, r[k]));
            }
        }
        if (vec_is_zero(f, v)) return std::optional<Vec<GFpField>>{};
        return std::optional<Vec<GFpField>>{v};
    };

    std::function<void(int)> dfs = [&](int c) {
        if (c == n) {
            result.push_back(phi);
            return;
        }
        std::uint64_t total = 1;
        for (int k = 0; k < n; ++k) total *= f.p;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t x = code;
            Vec<GFpField> col(n);
            for (int k = 0; k < n; ++k) {
                col[k] = static_cast<GFpField::Elem>(x % f.p);
                x /= f.p;
            }
            auto red = independent_after_adding(col);
            if (!red) continue;
            for (int k = 0; k < n; ++k) phi.at(k, c) = col[k];
            bool pass = true;
            for (auto& ch : checks) {
                if (ch.ready != c + 1) continue;
                Vec<GFpField> lhs = phi_apply_prefix(A, phi, ch.i, ch.j, c + 1);
                Vec<GFpField> rhs = multiply(A, mat_col(phi, ch.i), mat_col(phi, ch.j));
                if (!vec_is_zero(f, vec_sub(f, lhs, rhs))) { pass = false; break; }
            }
            if (!pass) continue;
            reduced.push_back(*red);
            dfs(c + 1);
            reduced.pop_back();
        }
    };
    dfs(0);
    return result;
}

/// Induced linear action on H2 in h_reps coordinates.
template <class F>
Mat<F> induced_h_action(const Algebra<F>& A, const CohomologyBasis<F>& coh, const Mat<F>& phi) {
    const F& f = A.f;
    int h = coh.dim_h_ccd;
    Mat<F> M(f, h, h);
    for (int j = 0; j < h; ++j) {
        BilinearForm<F> rep(f, A.n);
        for (int t = 0; t < coh.z_ccd.ambient; ++t) rep.coeffs[t] = coh.h_reps.at(j, t);
        BilinearForm<F> img = pullback_form(f, phi, rep);
        DeltaVec<F> coords = class_coordinates(coh, img.coeffs);
        for (int i = 0; i < h; ++i) M.at(i, j) = coords[i];
    }
    return M;
}

/// Canonical point of the Grassmannian G_s(GF(p)^h): the rref of a spanning
/// matrix, flattened.
struct GrassmannPoint {
    int s = 0, h = 0;
    std::vector<std::uint32_t> rref; // s*h entries

    bool operator<(const GrassmannPoint& o) const { return rref < o.rref; }
    bool operator==(const GrassmannPoint& o) const { return rref == o.rref; }
};

inline GrassmannPoint canonical_point(const GFpField& f, Mat<GFpField> rows) {
    rref_inplace(rows);
    GrassmannPoint p;
    p.h = rows.cols;
    std::vector<std::uint32_t> flat;
    int rank = 0;
    for (int i = 0; i < rows.rows; ++i) {
        bool zero = true;
        for (int j = 0; j < rows.cols; ++j)
            if (!f.is_zero(rows.at(i, j))) { zero = false; break; }
        if (!zero) ++rank;
    }
    p.s = rank;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rows.cols; ++j) flat.push_back(rows.at(i, j));
    p.rref = std::move(flat);
    return p;
}

/// All s-dimensional subspaces of GF(p)^h in canonical form.
inline std::vector<GrassmannPoint> enumerate_grassmannian(const GFpField& f, int h, int s) {
    std::vector<GrassmannPoint> out;
    if (s == 0 || s > h) return out;
    std::vector<int> pivots(s);
    std::function<void(int, int)> choose = [&](int idx, int from) {
        if (idx == s) {
            // free positions: row i, column j > pivots[i], j not a pivot
            std::vector<std::pair<int, int>> free_pos;
            std::set<int> pivset(pivots.begin(), pivots.end());
            for (int i = 0; i < s; ++i)
                for (int j = pivots[i] + 1; j < h; ++j)
                    if (!pivset.count(j)) free_pos.emplace_back(i, j);
            std::uint64_t total = 1;
            for (std::size_t k = 0; k < free_pos.size(); ++k) total *= f.p;
            for (std::uint64_t code = 0; code < total; ++code) {
                Mat<GFpField> m(f, s, h);
                for (int i = 0; i < s; ++i) m.at(i, pivots[i]) = 1;
                std::uint64_t x = code;
                for (auto& [i, j] : free_pos) {
                    m.at(i, j) = static_cast<GFpField::Elem>(x % f.p);
                    x /= f.p;
                }
                GrassmannPoint p;
                p.s = s;
                p.h = h;
                for (int i = 0; i < s; ++i)
                    for (int j = 0; j < h; ++j) p.rref.push_back(m.at(i, j));
                out.push_back(std::move(p));
            }
            return;
        }
        for (int c = from; c <= h - (s - idx); ++c) {
            pivots[idx] = c;
            choose(idx + 1, c + 1);
        }
    };
    choose(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline GrassmannPoint apply_to_point(const GFpField& f, const Mat<GFpField>& M,
                                     const GrassmannPoint& p) {
    // rows transform by right-multiplication with M^T
    Mat<GFpField> rows(f, p.s, p.h);
    for (int i = 0; i < p.s; ++i)
        for (int j = 0; j < p.h; ++j) rows.at(i, j) = p.rref[i * p.h + j];
    Mat<GFpField> img(f, p.s, p.h);
    for (int i = 0; i < p.s; ++i)
        for (int j = 0; j < p.h; ++j) {
            GFpField::Elem acc = 0;
            for (int k = 0; k < p.h; ++k) acc = f.add(acc, f.mul(M.at(j, k), rows.at(i, k)));
            img.at(i, j) = acc;
        }
    return canonical_point(f, img);
}

// union-find over point indices, path halving + union by size
struct UnionFind {
    std::vector<int> parent, size;
    explicit UnionFind(int n) : parent(n), size(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    bool unite(int i, int j) {
        int pi = find(i), pj = find(j);
        if (pi == pj) return false;
        if (size[pi] < size[pj]) std::swap(pi, pj);
        parent[pj] = pi;
        size[pi] += size[pj];
        return true;
    }
};

struct Orbit {
    std::vector<GrassmannPoint> points; // sorted canonical members
    bool jordan_tag = false;            // R_s when true, U_s otherwise
    std::uint64_t stabilizer = 0;       // stabilizer order of points[0]
};

struct OrbitPartition {
    std::vector<Orbit> orbits; // sorted by representative
    std::uint64_t aut_order = 0;
    int t_count = 0;           // |T_s|
};

/// Theta representative attached to a Grassmann point via the h_reps basis.
inline Cocycle<GFpField> point_cocycle(const GFpField& f, const CohomologyBasis<GFpField>& coh,
                                       const GrassmannPoint& p) {
    Cocycle<GFpField> theta;
    int n_from_delta = 0;
    {
        // ambient Delta length is n(n+1)/2; recover n
        int N = coh.z_ccd.ambient;
        while (n_from_delta * (n_from_delta + 1) / 2 < N) ++n_from_delta;
    }
    for (int i = 0; i < p.s; ++i) {
        BilinearForm<GFpField> b(f, n_from_delta);
        for (int j = 0; j < p.h; ++j) {
            if (p.rref[i * p.h + j] == 0) continue;
            for (int t = 0; t < coh.z_ccd.ambient; ++t)
                b.coeffs[t] = f.add(b.coeffs[t], f.mul(p.rref[i * p.h + j], coh.h_reps.at(j, t)));
        }
        theta.components.push_back(std::move(b));
    }
    return theta;
}

/// Aut(A)-orbits on T_s(A) over GF(p) via canonical-form hashing + union-find
/// with the full automorphism list as generators.
inline OrbitPartition orbit_partition(const Algebra<GFpField>& A, int s) {
    const GFpField& f = A.f;
    auto coh = cohomology_basis(A);
    auto auts = enumerate_automorphisms(A);
    OrbitPartition out;
    out.aut_order = auts.size();

    std::vector<Mat<GFpField>> induced;
    induced.reserve(auts.size());
    for (auto& phi : auts) induced.push_back(induced_h_action(A, coh, phi));

    auto all_points = enumerate_grassmannian(f, coh.dim_h_ccd, s);
    std::vector<GrassmannPoint> ts;
    std::vector<bool> tags;
    for (auto& p : all_points) {
        auto res = membership_Ts(A, point_cocycle(f, coh, p), coh);
        if (res.in_ts) {
            ts.push_back(p);
            tags.push_back(res.jordan_subspace);
        }
    }
    out.t_count = int(ts.size());
    if (ts.empty()) return out;

    std::map<GrassmannPoint, int> index;
    for (int i = 0; i < int(ts.size()); ++i) index[ts[i]] = i;

    UnionFind uf(int(ts.size()));
    for (int i = 0; i < int(ts.size()); ++i)
        for (auto& M : induced) {
            GrassmannPoint img = apply_to_point(f, M, ts[i]);
            auto it = index.find(img);
            if (it == index.end())
                throw std::logic_error("orbit_partition: T_s not stable under Aut");
            uf.unite(i, it->second);
        }

    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < int(ts.size()); ++i) groups[uf.find(i)].push_back(i);
    for (auto& [root, members] : groups) {
        Orbit orb;
        for (int m : members) {
            orb.points.push_back(ts[m]);
            if (tags[m] != tags[members[0]])
                throw std::logic_error("orbit_partition: R/U tag not orbit-invariant");
        }
        std::sort(orb.points.begin(), orb.points.end());
        orb.jordan_tag = tags[members[0]];
        for (auto& M : induced)
            if (apply_to_point(f, M, orb.points[0]) == orb.points[0]) ++orb.stabilizer;
        out.orbits.push_back(std::move(orb));
    }
    std::sort(out.orbits.begin(), out.orbits.end(),
              [](const Orbit& a, const Orbit& b) { return a.points[0] < b.points[0]; });
    return out;
}

/// Independent oracle: the orbit of each point is computed directly by
/// applying every automorphism, no union-find involved.
inline std::vector<std::set<GrassmannPoint>> orbit_oracle(const Algebra<GFpField>& A, int s) {
    const GFpField& f = A.f;
    auto coh = cohomology_basis(A);
    auto auts = enumerate_automorphisms(A);
    auto all_points = enumerate_grassmannian(f, coh.dim_h_ccd, s);
    std::vector<GrassmannPoint> ts;
    for (auto& p : all_points)
        if (membership_Ts(A, point_cocycle(f, coh, p), coh).in_ts) ts.push_back(p);

    std::vector<Mat<GFpField>> induced;
    for (auto& phi : auts) induced.push_back(induced_h_action(A, coh, phi));

    std::set<GrassmannPoint> seen;
    std::vector<std::set<GrassmannPoint>> orbits;
    for (auto& p : ts) {
        if (seen.count(p)) continue;
        std::set<GrassmannPoint> orb;
        for (auto& M : induced) orb.insert(apply_to_point(f, M, p));
        for (auto& q : orb) seen.insert(q);
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

} // namespace ccd
