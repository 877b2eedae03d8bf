// Dense exact linear algebra over the fields of fields.hpp: reduced row
// echelon form, rank, kernel, solve, inverse, and canonical subspace bases
// with sum / intersection / membership.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "fields.hpp"

namespace ccd {

template <class F>
struct Mat {
    using Elem = typename F::Elem;
    F f;
    int rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(F field, int r, int c) : f(field), rows(r), cols(c), a(std::size_t(r) * c, field.zero()) {}

    Elem& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
    const Elem& at(int i, int j) const { return a[std::size_t(i) * cols + j]; }

    static Mat identity(F field, int n) {
        Mat m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    bool operator==(const Mat& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        if (!f.same_as(o.f)) throw field_mismatch("Mat::operator==");
        for (std::size_t k = 0; k < a.size(); ++k)
            if (!f.eq(a[k], o.a[k])) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(f, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (!f.same_as(o.f)) throw field_mismatch("Mat::operator*");
        if (cols != o.rows) throw dimension_mismatch("Mat::operator*: inner dims");
        Mat r(f, rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                if (f.is_zero(at(i, k))) continue;
                for (int j = 0; j < o.cols; ++j)
                    r.at(i, j) = f.add(r.at(i, j), f.mul(at(i, k), o.at(k, j)));
            }
        return r;
    }

    std::vector<Elem> apply(const std::vector<Elem>& v) const {
        if (int(v.size()) != cols) throw dimension_mismatch("Mat::apply");
        std::vector<Elem> r(rows, f.zero());
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!f.is_zero(at(i, j))) r[i] = f.add(r[i], f.mul(at(i, j), v[j]));
        return r;
    }
};

/// In-place reduced row echelon form. Returns the pivot columns (strictly
/// increasing); rank = pivots.size().
template <class F>
std::vector<int> rref_inplace(Mat<F>& m) {
    const F& f = m.f;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        typename F::Elem inv = f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            typename F::Elem factor = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
struct EchelonResult {
    Mat<F> mat;
    int rank = 0;
    std::vector<int> pivots;
};

template <class F>
EchelonResult<F> echelonize(const Mat<F>& m) {
    Mat<F> copy = m;
    auto pivots = rref_inplace(copy);
    return {std::move(copy), int(pivots.size()), std::move(pivots)};
}

/// Canonical basis of a linear subspace: reduced row echelon rows of full rank.
/// Two subspaces over the same field are equal iff their bases compare equal.
template <class F>
struct SubspaceBasis {
    int ambient = 0;
    Mat<F> basis; // rref, rows linearly independent

    SubspaceBasis() = default;
    SubspaceBasis(F f, int ambient_dim) : ambient(ambient_dim), basis(f, 0, ambient_dim) {}

    int dim() const { return basis.rows; }
    const F& field() const { return basis.f; }

    bool operator==(const SubspaceBasis& o) const {
        return ambient == o.ambient && basis == o.basis;
    }

    static SubspaceBasis from_rows(const Mat<F>& rows) {
        auto ech = echelonize(rows);
        SubspaceBasis s;
        s.ambient = rows.cols;
        s.basis = Mat<F>(rows.f, ech.rank, rows.cols);
        for (int i = 0; i < ech.rank; ++i)
            for (int j = 0; j < rows.cols; ++j) s.basis.at(i, j) = ech.mat.at(i, j);
        return s;
    }

    static SubspaceBasis full(F f, int n) { return from_rows(Mat<F>::identity(f, n)); }

    bool contains(const std::vector<typename F::Elem>& v) const {
        const F& f = basis.f;
        if (int(v.size()) != ambient) throw dimension_mismatch("SubspaceBasis::contains");
        std::vector<typename F::Elem> w = v;
        int row = 0;
        for (int c = 0; c < ambient && row < basis.rows; ++c) {
            if (f.is_zero(basis.at(row, c))) continue; // not a pivot of this row
            if (!f.is_zero(w[c])) {
                typename F::Elem factor = w[c]; // pivot entries are 1
                for (int j = c; j < ambient; ++j)
                    w[j] = f.sub(w[j], f.mul(factor, basis.at(row, j)));
            }
            ++row;
        }
        for (auto& x : w)
            if (!f.is_zero(x)) return false;
        return true;
    }

    bool contains_subspace(const SubspaceBasis& o) const {
        for (int i = 0; i < o.basis.rows; ++i) {
            std::vector<typename F::Elem> v(ambient);
            for (int j = 0; j < ambient; ++j) v[j] = o.basis.at(i, j);
            if (!contains(v)) return false;
        }
        return true;
    }
};

template <class F>
SubspaceBasis<F> subspace_sum(const SubspaceBasis<F>& a, const SubspaceBasis<F>& b) {
    if (a.ambient != b.ambient) throw dimension_mismatch("subspace_sum: ambient");
    if (!a.basis.f.same_as(b.basis.f)) throw field_mismatch("subspace_sum");
    Mat<F> stack(a.basis.f, a.dim() + b.dim(), a.ambient);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.ambient; ++j) stack.at(i, j) = a.basis.at(i, j);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < a.ambient; ++j) stack.at(a.dim() + i, j) = b.basis.at(i, j);
    return SubspaceBasis<F>::from_rows(stack);
}

/// Zassenhaus: rows (a|a) for a in A, (b|0) for b in B; after elimination the
/// right halves of rows with zero left half span the intersection.
template <class F>
SubspaceBasis<F> subspace_intersect(const SubspaceBasis<F>& a, const SubspaceBasis<F>& b) {
    if (a.ambient != b.ambient) throw dimension_mismatch("subspace_intersect: ambient");
    if (!a.basis.f.same_as(b.basis.f)) throw field_mismatch("subspace_intersect");
    const F& f = a.basis.f;
    int n = a.ambient;
    Mat<F> z(f, a.dim() + b.dim(), 2 * n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < n; ++j) {
            z.at(i, j) = a.basis.at(i, j);
            z.at(i, n + j) = a.basis.at(i, j);
        }
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < n; ++j) z.at(a.dim() + i, j) = b.basis.at(i, j);
    rref_inplace(z);
    Mat<F> inter(f, 0, n);
    std::vector<typename F::Elem> rows;
    int count = 0;
    for (int i = 0; i < z.rows; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            if (!f.is_zero(z.at(i, j))) left_zero = false;
        bool right_zero = true;
        for (int j = 0; j < n && right_zero; ++j)
            if (!f.is_zero(z.at(i, n + j))) right_zero = false;
        if (left_zero && !right_zero) {
            ++count;
            for (int j = 0; j < n; ++j) rows.push_back(z.at(i, n + j));
        }
    }
    Mat<F> m(f, count, n);
    m.a = std::move(rows);
    return SubspaceBasis<F>::from_rows(m);
}

/// Basis of { v : m v = 0 }.
template <class F>
SubspaceBasis<F> kernel(const Mat<F>& m) {
    const F& f = m.f;
    auto ech = echelonize(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : ech.pivots) is_pivot[c] = true;
    int k = m.cols - ech.rank;
    Mat<F> basis(f, k, m.cols);
    int row = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        basis.at(row, c) = f.one();
        for (int pi = 0; pi < ech.rank; ++pi)
            basis.at(row, ech.pivots[pi]) = f.neg(ech.mat.at(pi, c));
        ++row;
    }
    return SubspaceBasis<F>::from_rows(basis);
}

/// Solve m x = rhs; returns one solution or nullopt when inconsistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const Mat<F>& m,
                                                   const std::vector<typename F::Elem>& rhs) {
    const F& f = m.f;
    if (int(rhs.size()) != m.rows) throw dimension_mismatch("solve: rhs size");
    Mat<F> aug(f, m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = rhs[i];
    }
    auto pivots = rref_inplace(aug);
    for (int c : pivots)
        if (c == m.cols) return std::nullopt; // pivot in rhs column
    std::vector<typename F::Elem> x(m.cols, f.zero());
    for (int i = 0; i < int(pivots.size()); ++i) x[pivots[i]] = aug.at(i, m.cols);
    return x;
}

template <class F>
Mat<F> inverse(const Mat<F>& m) {
    const F& f = m.f;
    if (m.rows != m.cols) throw dimension_mismatch("inverse: not square");
    int n = m.rows;
    Mat<F> aug(f, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = f.one();
    }
    auto pivots = rref_inplace(aug);
    if (int(pivots.size()) != n || pivots.back() >= n) throw singular_matrix("inverse");
    Mat<F> inv(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

template <class F>
bool is_invertible(const Mat<F>& m) {
    if (m.rows != m.cols) return false;
    return echelonize(m).rank == m.rows;
}

} // namespace ccd
