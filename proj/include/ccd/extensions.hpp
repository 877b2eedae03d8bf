// Central extensions A_theta, the annihilator decomposition
// Ann(A_theta) = (Ann(theta) cap Ann(A)) + V, and the inverse construction:
// split off the annihilator and reconstruct the algebra from a quotient and a
// cocycle (Lemma-1 round trip).
#pragma once

#include "cohomology.hpp"

namespace ccd {

struct no_annihilator : std::runtime_error {
    explicit no_annihilator(const std::string& what) : std::runtime_error(what) {}
};

template <class F>
struct ExtensionSpec {
    Algebra<F> base;
    Cocycle<F> cocycle;
};

/// A_theta on A + V: old coordinates keep the base product, each cocycle
/// component feeds one appended coordinate, V is central.
template <class F>
Algebra<F> central_extension(const ExtensionSpec<F>& spec) {
    const F& f = spec.base.f;
    const int n = spec.base.n, s = spec.cocycle.size();
    for (auto& comp : spec.cocycle.components)
        if (comp.n != n) throw dimension_mismatch("central_extension: cocycle dims");
    Algebra<F> ext(f, n + s, spec.base.name + "_ext");
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Vec<F>& out = ext.prod(i, j);
            const Vec<F>& b = spec.base.prod(i, j);
            for (int k = 0; k < n; ++k) out[k] = b[k];
            for (int t = 0; t < s; ++t) out[n + t] = spec.cocycle.components[t].at(i, j);
        }
    return ext;
}

template <class F>
Algebra<F> central_extension(const Algebra<F>& base, const Cocycle<F>& theta) {
    return central_extension(ExtensionSpec<F>{base, theta});
}

/// Both sides of Ann(A_theta) = (Ann(theta) cap Ann(A)) + V inside A_theta.
template <class F>
bool verify_ann_decomposition(const ExtensionSpec<F>& spec) {
    const F& f = spec.base.f;
    const int n = spec.base.n, s = spec.cocycle.size();
    Algebra<F> ext = central_extension(spec);
    SubspaceBasis<F> lhs = annihilator(ext);

    SubspaceBasis<F> core = subspace_intersect(cocycle_annihilator(spec.base, spec.cocycle),
                                               annihilator(spec.base));
    Mat<F> rows(f, core.dim() + s, n + s);
    for (int i = 0; i < core.dim(); ++i)
        for (int j = 0; j < n; ++j) rows.at(i, j) = core.basis.at(i, j);
    for (int t = 0; t < s; ++t) rows.at(core.dim() + t, n + t) = f.one();
    SubspaceBasis<F> rhs = SubspaceBasis<F>::from_rows(rows);
    // the formula is a direct sum: dimensions must add up as well
    return lhs == rhs && lhs.dim() == core.dim() + s;
}

template <class F>
struct SplitResult {
    Algebra<F> quotient;
    Cocycle<F> theta;
    Mat<F> section;                 // columns: chosen complement basis, then Ann basis
    std::vector<int> complement;    // coordinates spanning the complement
};

/// Choose the complement spanned by the non-pivot coordinates of Ann(A),
/// define the quotient product through the projection P along Ann(A), and
/// read the cocycle off the annihilator components.  Reconstruction contract:
/// change_of_basis(A, section) == central_extension(quotient, theta).
template <class F>
SplitResult<F> split_annihilator(const Algebra<F>& A) {
    const F& f = A.f;
    const int n = A.n;
    SubspaceBasis<F> ann = annihilator(A);
    const int m = ann.dim();
    if (m == 0) throw no_annihilator("split_annihilator: Ann(A) = 0");

    auto ech = echelonize(ann.basis);
    std::vector<bool> is_pivot(n, false);
    for (int p : ech.pivots) is_pivot[p] = true;
    std::vector<int> comp;
    for (int i = 0; i < n; ++i)
        if (!is_pivot[i]) comp.push_back(i);
    const int nq = n - m;

    SplitResult<F> res;
    res.complement = comp;
    res.quotient = Algebra<F>(f, nq, A.name + "_quot");
    res.theta.components.assign(m, BilinearForm<F>(f, nq));

    for (int a = 0; a < nq; ++a)
        for (int b = a; b < nq; ++b) {
            Vec<F> w = A.prod(comp[a], comp[b]);
            // annihilator part: coefficients against the echelon basis rows
            std::vector<typename F::Elem> delta(m);
            for (int t = 0; t < m; ++t) delta[t] = w[ech.pivots[t]];
            Vec<F> proj = w;
            for (int t = 0; t < m; ++t)
                for (int j = 0; j < n; ++j)
                    proj[j] = f.sub(proj[j], f.mul(delta[t], ann.basis.at(t, j)));
            for (int k = 0; k < nq; ++k) res.quotient.prod(a, b)[k] = proj[comp[k]];
            for (int t = 0; t < m; ++t) res.theta.components[t].at(a, b) = delta[t];
        }

    res.section = Mat<F>(f, n, n);
    for (int k = 0; k < nq; ++k) res.section.at(comp[k], k) = f.one();
    for (int t = 0; t < m; ++t)
        for (int j = 0; j < n; ++j) res.section.at(j, nq + t) = ann.basis.at(t, j);
    return res;
}

/// Lemma-1 round trip: split, rebuild, compare along the recorded section.
template <class F>
bool lemma1_roundtrip(const Algebra<F>& A) {
    SplitResult<F> sp = split_annihilator(A);
    Algebra<F> rebuilt = central_extension(ExtensionSpec<F>{sp.quotient, sp.theta});
    Algebra<F> transported = change_of_basis(A, sp.section);
    transported.name = rebuilt.name;
    return transported == rebuilt;
}

} // namespace ccd
