// Second cohomology machinery: cocycle spaces Z2 for the CCD and Jordan
// conditions, coboundaries B2, canonical complements representing H2 = Z2/B2,
// cocycle annihilators, and the T_s / R_s / U_s membership tests.
//
// Symmetric bilinear forms are written in the Delta basis: Delta_ij picks the
// (i,j) entry, i <= j, and a form is a coefficient vector over PairIndex.
#pragma once

#include "algebra.hpp"

namespace ccd {

template <class F>
using DeltaVec = std::vector<typename F::Elem>; // length n(n+1)/2

/// Symmetric bilinear form on an n-dimensional space, Delta coefficients.
template <class F>
struct BilinearForm {
    F f;
    int n = 0;
    DeltaVec<F> coeffs;

    BilinearForm() = default;
    BilinearForm(F field, int dim)
        : f(field), n(dim), coeffs(PairIndex(dim).count(), field.zero()) {}

    static BilinearForm delta(F field, int dim, int i, int j) {
        BilinearForm b(field, dim);
        b.coeffs[PairIndex(dim).idx(i, j)] = field.one();
        return b;
    }

    typename F::Elem& at(int i, int j) { return coeffs[PairIndex(n).idx(i, j)]; }
    const typename F::Elem& at(int i, int j) const { return coeffs[PairIndex(n).idx(i, j)]; }

    Mat<F> gram() const {
        Mat<F> g(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                g.at(i, j) = at(i, j);
                g.at(j, i) = at(i, j);
            }
        return g;
    }

    static BilinearForm from_gram(const F& f, const Mat<F>& g) {
        BilinearForm b(f, g.rows);
        for (int i = 0; i < g.rows; ++i)
            for (int j = i; j < g.rows; ++j) b.at(i, j) = g.at(i, j);
        return b;
    }

    typename F::Elem evaluate(const Vec<F>& x, const Vec<F>& y) const {
        typename F::Elem acc = f.zero();
        for (int i = 0; i < n; ++i) {
            if (f.is_zero(x[i])) continue;
            for (int j = 0; j < n; ++j) {
                if (f.is_zero(y[j])) continue;
                acc = f.add(acc, f.mul(f.mul(x[i], y[j]), at(std::min(i, j), std::max(i, j))));
            }
        }
        return acc;
    }

    /// Radical {x : theta(x, .) = 0} = kernel of the Gram matrix.
    SubspaceBasis<F> radical() const { return kernel(gram()); }

    bool is_zero() const { return vec_is_zero(f, coeffs); }
};

/// Cocycle with values in an s-dimensional space: one scalar form per
/// extension coordinate.
template <class F>
struct Cocycle {
    std::vector<BilinearForm<F>> components;
    int size() const { return int(components.size()); }
};

enum class Variety { CCD, Jordan, SymmetricAll };

namespace detail {

template <class F>
void accumulate_vec_basis(const F& f, DeltaVec<F>& row, const PairIndex& pi, const Vec<F>& u,
                          int t, const typename F::Elem& sign) {
    // theta(u, e_t) = sum_k u_k * c_{min(k,t),max(k,t)}
    for (int k = 0; k < int(u.size()); ++k)
        if (!f.is_zero(u[k]))
            row[pi.idx(std::min(k, t), std::max(k, t))] =
                f.add(row[pi.idx(std::min(k, t), std::max(k, t))], f.mul(sign, u[k]));
}

template <class F>
void accumulate_vec_vec(const F& f, DeltaVec<F>& row, const PairIndex& pi, const Vec<F>& u,
                        const Vec<F>& v, const typename F::Elem& sign) {
    for (int k = 0; k < int(u.size()); ++k) {
        if (f.is_zero(u[k])) continue;
        for (int l = 0; l < int(v.size()); ++l) {
            if (f.is_zero(v[l])) continue;
            int id = pi.idx(std::min(k, l), std::max(k, l));
            row[id] = f.add(row[id], f.mul(sign, f.mul(u[k], v[l])));
        }
    }
}

} // namespace detail

/// Linear conditions on Delta coefficients instantiated on all n^4 basis
/// tuples.  When `deduplicate` is set, repeated rows are dropped before the
/// kernel computation; the kernel is the same either way (checked in tests).
template <class F>
SubspaceBasis<F> cocycle_space(const Algebra<F>& A, Variety variety, bool deduplicate = true) {
    const F& f = A.f;
    const int n = A.n;
    PairIndex pi(n);
    const int N = pi.count();
    if (variety == Variety::SymmetricAll) return SubspaceBasis<F>::full(f, N);

    detail::ProductTables<F> T(A);

    std::vector<DeltaVec<F>> rows;
    auto push_row = [&](DeltaVec<F>&& row) {
        if (vec_is_zero(f, row)) return;
        if (deduplicate) {
            for (auto& r : rows)
                if (r == row) return;
        }
        rows.push_back(std::move(row));
    };

    typename F::Elem plus = f.one(), minus = f.neg(f.one());
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    // CCD cocycle condition at (x,y,a,b) = (e_p,e_q,e_r,e_s)
                    DeltaVec<F> row(N, f.zero());
                    detail::accumulate_vec_basis(f, row, pi, T.tp(p, q, r), s, plus);
                    detail::accumulate_vec_basis(f, row, pi, T.tp(p, s, r), q, plus);
                    detail::accumulate_vec_basis(f, row, pi, T.tp(q, s, r), p, plus);
                    detail::accumulate_vec_basis(f, row, pi, T.tp(p, q, s), r, minus);
                    detail::accumulate_vec_basis(f, row, pi, T.tp(p, r, s), q, minus);
                    detail::accumulate_vec_basis(f, row, pi, T.tp(q, r, s), p, minus);
                    push_row(std::move(row));
                    if (variety == Variety::Jordan) {
                        // theta(xy,zt)+theta(xz,yt)+theta(xt,yz)
                        //   = theta((xz)y,t)+theta((zt)y,x)+theta((tx)y,z)
                        DeltaVec<F> jrow(N, f.zero());
                        detail::accumulate_vec_vec(f, jrow, pi, T.dp(p, q), T.dp(r, s), plus);
                        detail::accumulate_vec_vec(f, jrow, pi, T.dp(p, r), T.dp(q, s), plus);
                        detail::accumulate_vec_vec(f, jrow, pi, T.dp(p, s), T.dp(q, r), plus);
                        detail::accumulate_vec_basis(f, jrow, pi, T.tp(p, r, q), s, minus);
                        detail::accumulate_vec_basis(f, jrow, pi, T.tp(r, s, q), p, minus);
                        detail::accumulate_vec_basis(f, jrow, pi, T.tp(s, p, q), r, minus);
                        push_row(std::move(jrow));
                    }
                }

    Mat<F> sys(f, int(rows.size()), N);
    for (int i = 0; i < int(rows.size()); ++i)
        for (int j = 0; j < N; ++j) sys.at(i, j) = rows[i][j];
    return kernel(sys);
}

/// B2: span of delta f (x,y) = f(xy) over a dual basis; dim = dim A^2.
template <class F>
SubspaceBasis<F> coboundary_space(const Algebra<F>& A) {
    const F& f = A.f;
    PairIndex pi(A.n);
    Mat<F> rows(f, A.n, pi.count());
    for (int k = 0; k < A.n; ++k)
        for (int i = 0; i < A.n; ++i)
            for (int j = i; j < A.n; ++j) rows.at(k, pi.idx(i, j)) = A.prod(i, j)[k];
    return SubspaceBasis<F>::from_rows(rows);
}

/// Z2_CCD, Z2_J, B2 and a canonical complement of B2 inside Z2_CCD whose
/// classes represent H2.  Complement representatives are the reduced-echelon
/// rows of Z2 whose pivot coordinates do not occur as pivots of B2.
///
/// z_j is the formal solution space of the Jordan cocycle condition; it
/// characterizes Jordan extensions only over a Jordan base.  Every extension
/// of a non-Jordan algebra is non-Jordan, so in that case the Jordan part of
/// H2 is the zero space (the tables write it as the empty set).  The two
/// cases are told apart by base_jordan = (B2 <= Z2_J), which is equivalent to
/// the linearized Jordan identity for the base and needs no characteristic
/// guard.
template <class F>
struct CohomologyBasis {
    SubspaceBasis<F> z_ccd, z_j, b2;
    Mat<F> h_reps;           // rows: representatives in Delta coordinates
    std::vector<int> h_pivots;
    int dim_h_ccd = 0, dim_h_j = 0;
    bool base_jordan = false;
    SubspaceBasis<F> hj_in_h; // Jordan classes in h_reps coordinates (semantic)
};

template <class F>
DeltaVec<F> class_coordinates(const CohomologyBasis<F>& coh, const DeltaVec<F>& theta);

template <class F>
CohomologyBasis<F> cohomology_basis(const Algebra<F>& A) {
    const F& f = A.f;
    CohomologyBasis<F> c;
    c.z_ccd = cocycle_space(A, Variety::CCD);
    c.z_j = cocycle_space(A, Variety::Jordan);
    c.b2 = coboundary_space(A);
    std::vector<bool> bpiv(c.z_ccd.ambient, false);
    {
        auto eb = echelonize(c.b2.basis);
        for (int p : eb.pivots) bpiv[p] = true;
    }
    auto ez = echelonize(c.z_ccd.basis);
    std::vector<int> keep;
    for (std::size_t t = 0; t < ez.pivots.size(); ++t)
        if (!bpiv[ez.pivots[t]]) keep.push_back(int(t));
    c.h_reps = Mat<F>(f, int(keep.size()), c.z_ccd.ambient);
    for (int r = 0; r < int(keep.size()); ++r) {
        c.h_pivots.push_back(ez.pivots[keep[r]]);
        for (int j = 0; j < c.z_ccd.ambient; ++j) c.h_reps.at(r, j) = ez.mat.at(keep[r], j);
    }
    c.dim_h_ccd = c.h_reps.rows;
    c.base_jordan = c.z_j.contains_subspace(c.b2);
    if (c.base_jordan) {
        Mat<F> im(f, c.z_j.dim(), c.dim_h_ccd);
        for (int i = 0; i < c.z_j.dim(); ++i) {
            DeltaVec<F> v(c.z_ccd.ambient);
            for (int j = 0; j < c.z_ccd.ambient; ++j) v[j] = c.z_j.basis.at(i, j);
            DeltaVec<F> coords = class_coordinates(c, v);
            for (int j = 0; j < c.dim_h_ccd; ++j) im.at(i, j) = coords[j];
        }
        c.hj_in_h = SubspaceBasis<F>::from_rows(im);
    } else {
        c.hj_in_h = SubspaceBasis<F>(f, c.dim_h_ccd);
    }
    c.dim_h_j = c.hj_in_h.dim();
    return c;
}

/// Coordinates of [theta] in the h_reps basis: the unique gamma with
/// theta - sum gamma_i rep_i in B2.  Throws if theta is not in Z2_CCD.
template <class F>
DeltaVec<F> class_coordinates(const CohomologyBasis<F>& coh, const DeltaVec<F>& theta) {
    const F& f = coh.z_ccd.basis.f;
    int N = coh.z_ccd.ambient;
    int h = coh.h_reps.rows, b = coh.b2.dim();
    Mat<F> sys(f, N, h + b);
    for (int j = 0; j < N; ++j) {
        for (int i = 0; i < h; ++i) sys.at(j, i) = coh.h_reps.at(i, j);
        for (int i = 0; i < b; ++i) sys.at(j, h + i) = coh.b2.basis.at(i, j);
    }
    auto sol = solve(sys, theta);
    if (!sol) throw std::domain_error("class_coordinates: form is not a cocycle");
    DeltaVec<F> out(sol->begin(), sol->begin() + h);
    return out;
}

/// Ann(theta) = intersection of the component radicals.
template <class F>
SubspaceBasis<F> cocycle_annihilator(const Algebra<F>& A, const Cocycle<F>& theta) {
    SubspaceBasis<F> acc = SubspaceBasis<F>::full(A.f, A.n);
    for (auto& comp : theta.components) {
        if (comp.n != A.n) throw dimension_mismatch("cocycle_annihilator: component dim");
        acc = subspace_intersect(acc, comp.radical());
    }
    return acc;
}

struct TsResult {
    bool in_ts = false;
    bool classes_independent = false;
    bool annihilator_trivial = false;
    bool jordan_subspace = false; // R_s when true, U_s otherwise (given in_ts)
};

/// W = <[theta_1],...,[theta_s]> belongs to T_s iff the joint annihilator of
/// the representatives meets Ann(A) trivially and the classes are linearly
/// independent in H2.  The split is R_s when W lies inside the Jordan part.
template <class F>
TsResult membership_Ts(const Algebra<F>& A, const Cocycle<F>& theta,
                       const CohomologyBasis<F>& coh) {
    const F& f = A.f;
    TsResult res;
    auto joint = cocycle_annihilator(A, theta);
    res.annihilator_trivial = subspace_intersect(joint, annihilator(A)).dim() == 0;

    int s = theta.size();
    Mat<F> cls(f, s, coh.dim_h_ccd);
    for (int i = 0; i < s; ++i) {
        DeltaVec<F> coords = class_coordinates(coh, theta.components[i].coeffs);
        for (int j = 0; j < coh.dim_h_ccd; ++j) cls.at(i, j) = coords[j];
    }
    auto sub = SubspaceBasis<F>::from_rows(cls);
    res.classes_independent = sub.dim() == s;
    res.jordan_subspace = coh.hj_in_h.contains_subspace(sub);
    res.in_ts = res.annihilator_trivial && res.classes_independent;
    return res;
}

} // namespace ccd
