// Structure-constant commutative algebras: products, associators, the G-form,
// the identity engine (CCD / linearized Jordan / almost-Jordan), power
// filtration and nilpotency, annihilator, basis change and isomorphism
// fingerprints.
#pragma once

#include <array>
#include <cassert>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace ccd {

/// Index of the unordered pair (i,j), i <= j, 0-based, in lexicographic order.
struct PairIndex {
    int n;
    explicit PairIndex(int dim) : n(dim) {}
    int count() const { return n * (n + 1) / 2; }
    int idx(int i, int j) const {
        if (i > j) std::swap(i, j);
        return i * n - i * (i - 1) / 2 + (j - i);
    }
    std::pair<int, int> pair(int k) const {
        for (int i = 0; i < n; ++i) {
            int row = n - i;
            if (k < row) return {i, i + k};
            k -= row;
        }
        throw dimension_mismatch("PairIndex::pair");
    }
};

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
Vec<F> zero_vec(const F& f, int n) { return Vec<F>(n, f.zero()); }

template <class F>
Vec<F> basis_vec(const F& f, int n, int i) {
    Vec<F> v(n, f.zero());
    v[i] = f.one();
    return v;
}

template <class F>
void add_scaled(const F& f, Vec<F>& acc, const typename F::Elem& c, const Vec<F>& v) {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = f.add(acc[k], f.mul(c, v[k]));
}

template <class F>
Vec<F> vec_add(const F& f, const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = f.add(r[k], b[k]);
    return r;
}

template <class F>
Vec<F> vec_sub(const F& f, const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = f.sub(r[k], b[k]);
    return r;
}

template <class F>
bool vec_is_zero(const F& f, const Vec<F>& v) {
    for (auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

/// Commutative algebra on basis e_1..e_n given by structure constants
/// c_{ij}^k stored once per unordered pair (i <= j).
template <class F>
struct Algebra {
    F f;
    int n = 0;
    std::string name;
    std::vector<Vec<F>> sc; // PairIndex order; sc[idx(i,j)][k] = c_{ij}^k

    Algebra() = default;
    Algebra(F field, int dim, std::string nm = "")
        : f(field), n(dim), name(std::move(nm)),
          sc(PairIndex(dim).count(), zero_vec(field, dim)) {}

    const Vec<F>& prod(int i, int j) const { return sc[PairIndex(n).idx(i, j)]; }
    Vec<F>& prod(int i, int j) { return sc[PairIndex(n).idx(i, j)]; }

    void set_product(int i, int j, int k, const typename F::Elem& c) {
        prod(i, j)[k] = c;
    }

    bool operator==(const Algebra& o) const {
        if (n != o.n) return false;
        if (!f.same_as(o.f)) throw field_mismatch("Algebra::operator==");
        for (std::size_t t = 0; t < sc.size(); ++t)
            for (int k = 0; k < n; ++k)
                if (!f.eq(sc[t][k], o.sc[t][k])) return false;
        return true;
    }

    bool is_zero_algebra() const {
        for (auto& v : sc)
            if (!vec_is_zero(f, v)) return false;
        return true;
    }
};

template <class F>
Vec<F> multiply(const Algebra<F>& A, const Vec<F>& x, const Vec<F>& y) {
    const F& f = A.f;
    if (int(x.size()) != A.n || int(y.size()) != A.n)
        throw dimension_mismatch("multiply: vector length");
    Vec<F> r = zero_vec(f, A.n);
    for (int i = 0; i < A.n; ++i) {
        if (f.is_zero(x[i])) continue;
        for (int j = 0; j < A.n; ++j) {
            if (f.is_zero(y[j])) continue;
            typename F::Elem c = f.mul(x[i], y[j]);
            add_scaled(f, r, c, A.prod(i, j));
        }
    }
    return r;
}

/// (x,y,z) = (xy)z - x(yz)
template <class F>
Vec<F> associator(const Algebra<F>& A, const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) {
    return vec_sub(A.f, multiply(A, multiply(A, x, y), z), multiply(A, x, multiply(A, y, z)));
}

/// G_x(y,z,t) = (yz,x,t) + (yt,x,z) + (zt,x,y)
template <class F>
Vec<F> g_form(const Algebra<F>& A, const Vec<F>& x, const Vec<F>& y, const Vec<F>& z,
              const Vec<F>& t) {
    const F& f = A.f;
    Vec<F> r = associator(A, multiply(A, y, z), x, t);
    r = vec_add(f, r, associator(A, multiply(A, y, t), x, z));
    r = vec_add(f, r, associator(A, multiply(A, z, t), x, y));
    return r;
}

enum class Identity { Commutative, CCD, AlmostJordan, JordanLinearized };

inline const char* identity_name(Identity id) {
    switch (id) {
        case Identity::Commutative: return "commutative";
        case Identity::CCD: return "ccd";
        case Identity::AlmostJordan: return "almost_jordan";
        default: return "jordan_linearized";
    }
}

struct IdentityResult {
    bool holds = true;
    std::vector<int> witness; // 1-based basis tuple of the first failure, if any
    std::string detail;
    explicit operator bool() const { return holds; }
};

namespace detail {

// For GF(p) the linearization argument needs the characteristic to exceed the
// identity degree; smaller fields are rejected (callers flag p >= 5 results as
// heuristic).
inline void identity_char_guard(const RatField&) {}
inline void identity_char_guard(const QOmegaField&) {}
inline void identity_char_guard(const GFpField& f) {
    if (f.p < 5) throw guard_exceeded("identity checks over GF(p) require p >= 5");
}

/// Precomputed double and triple products of basis vectors; the n^4 tuple
/// loops then reduce to sparse accumulations.
template <class F>
struct ProductTables {
    const Algebra<F>& A;
    std::vector<Vec<F>> triple; // (e_i e_j) e_k at ((i*n)+j)*n+k

    explicit ProductTables(const Algebra<F>& alg) : A(alg) {
        const F& f = A.f;
        int n = A.n;
        triple.assign(std::size_t(n) * n * n, zero_vec(f, n));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const Vec<F>& d = A.prod(i, j);
                for (int k = 0; k < n; ++k) {
                    Vec<F> w = mul_vec_basis(d, k);
                    triple[(std::size_t(i) * n + j) * n + k] = w;
                    if (i != j) triple[(std::size_t(j) * n + i) * n + k] = std::move(w);
                }
            }
    }

    const Vec<F>& dp(int i, int j) const { return A.prod(i, j); }
    const Vec<F>& tp(int i, int j, int k) const {
        return triple[(std::size_t(i) * A.n + j) * A.n + k];
    }
    // w * e_t
    Vec<F> mul_vec_basis(const Vec<F>& w, int t) const {
        const F& f = A.f;
        Vec<F> r = zero_vec(f, A.n);
        for (int m = 0; m < A.n; ++m)
            if (!f.is_zero(w[m])) add_scaled(f, r, w[m], A.prod(m, t));
        return r;
    }
    // u * v for two vectors
    Vec<F> mul_vec_vec(const Vec<F>& u, const Vec<F>& v) const { return multiply(A, u, v); }
};

// residuals on basis tuples, driven by the precomputed triple products
template <class F>
Vec<F> ccd_residual_basis(const ProductTables<F>& T, int x, int y, int a, int b) {
    const F& f = T.A.f;
    Vec<F> r = T.mul_vec_basis(T.tp(x, y, a), b);
    r = vec_add(f, r, T.mul_vec_basis(T.tp(x, b, a), y));
    r = vec_add(f, r, T.mul_vec_basis(T.tp(y, b, a), x)); // x((yb)a), commutative
    r = vec_sub(f, r, T.mul_vec_basis(T.tp(x, y, b), a));
    r = vec_sub(f, r, T.mul_vec_basis(T.tp(x, a, b), y));
    r = vec_sub(f, r, T.mul_vec_basis(T.tp(y, a, b), x));
    return r;
}

template <class F>
Vec<F> jordan_lin_residual_basis(const ProductTables<F>& T, int x, int y, int z, int t) {
    const F& f = T.A.f;
    Vec<F> r = T.mul_vec_vec(T.dp(x, y), T.dp(z, t));
    r = vec_add(f, r, T.mul_vec_vec(T.dp(x, z), T.dp(y, t)));
    r = vec_add(f, r, T.mul_vec_vec(T.dp(x, t), T.dp(y, z)));
    r = vec_sub(f, r, T.mul_vec_basis(T.tp(x, z, y), t));
    r = vec_sub(f, r, T.mul_vec_basis(T.tp(z, t, y), x));
    r = vec_sub(f, r, T.mul_vec_basis(T.tp(t, x, y), z));
    return r;
}

// Full polarization of 2((yx)x)x + y x^3 - 3 (y x^2) x in the cubed variable.
template <class F>
Vec<F> almost_jordan_polarized_basis(const ProductTables<F>& T, int y, int a, int b, int c) {
    const F& f = T.A.f;
    int n = T.A.n;
    Vec<F> r = zero_vec(f, n);
    int p[3] = {a, b, c};
    int order[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    typename F::Elem two = f.from_int(2), six = f.from_int(6);
    for (auto& o : order)
        add_scaled(f, r, two, T.mul_vec_basis(T.tp(y, p[o[0]], p[o[1]]), p[o[2]]));
    Vec<F> sum = T.mul_vec_basis(T.tp(a, b, c), y);
    sum = vec_add(f, sum, T.mul_vec_basis(T.tp(b, c, a), y));
    sum = vec_add(f, sum, T.mul_vec_basis(T.tp(c, a, b), y));
    add_scaled(f, r, two, sum);
    Vec<F> neg = T.mul_vec_basis(T.tp(a, b, y), c); // (y(ab))c, commutative
    neg = vec_add(f, neg, T.mul_vec_basis(T.tp(b, c, y), a));
    neg = vec_add(f, neg, T.mul_vec_basis(T.tp(c, a, y), b));
    add_scaled(f, r, f.neg(six), neg);
    return r;
}

template <class F>
Vec<F> almost_jordan_residual(const Algebra<F>& A, const Vec<F>& y, const Vec<F>& x) {
    const F& f = A.f;
    auto m = [&](const Vec<F>& u, const Vec<F>& v) { return multiply(A, u, v); };
    Vec<F> x2 = m(x, x);
    Vec<F> r = zero_vec(f, A.n);
    add_scaled(f, r, f.from_int(2), m(m(m(y, x), x), x));
    add_scaled(f, r, f.one(), m(y, m(x2, x)));
    add_scaled(f, r, f.neg(f.from_int(3)), m(m(y, x2), x));
    return r;
}

/// Deterministic vector grid used for the non-multilinear check: basis sums
/// with coefficients drawn from {0, 1, -1, 2}.
template <class F>
std::vector<Vec<F>> sample_grid(const F& f, int n) {
    std::vector<Vec<F>> g;
    for (int i = 0; i < n; ++i) g.push_back(basis_vec(f, n, i));
    typename F::Elem minus1 = f.neg(f.one()), two = f.from_int(2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec<F> v = basis_vec(f, n, i);
            v[j] = f.one();
            g.push_back(v);
            v[j] = minus1;
            g.push_back(v);
            Vec<F> w = basis_vec(f, n, i);
            w[i] = two;
            w[j] = f.one();
            g.push_back(w);
        }
    for (int i = 0; i + 2 < n; ++i) {
        Vec<F> v = zero_vec(f, n);
        v[i] = f.one(); v[i + 1] = f.one(); v[i + 2] = minus1;
        g.push_back(v);
    }
    return g;
}

} // namespace detail

/// Exact multilinear identity check over all basis tuples.  The almost-Jordan
/// identity is checked through its full polarization (equivalent in
/// characteristic 0 / characteristic > 4) plus the original identity on a
/// deterministic sample grid.  The witness is the first failing basis tuple in
/// lexicographic order.
template <class F>
IdentityResult check_identity(const Algebra<F>& A, Identity id) {
    const F& f = A.f;
    int n = A.n;
    IdentityResult res;
    std::vector<Vec<F>> e;
    for (int i = 0; i < n; ++i) e.push_back(basis_vec(f, n, i));

    if (id == Identity::Commutative) {
        // commutativity is structural; confirm multiply agrees on basis pairs
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!vec_is_zero(f, vec_sub(f, multiply(A, e[i], e[j]), multiply(A, e[j], e[i])))) {
                    res.holds = false;
                    res.witness = {i + 1, j + 1};
                    return res;
                }
        return res;
    }

    detail::identity_char_guard(f);
    detail::ProductTables<F> T(A);

    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    Vec<F> resid;
                    switch (id) {
                        case Identity::CCD:
                            resid = detail::ccd_residual_basis(T, p, q, r, s);
                            break;
                        case Identity::JordanLinearized:
                            resid = detail::jordan_lin_residual_basis(T, p, q, r, s);
                            break;
                        case Identity::AlmostJordan:
                            resid = detail::almost_jordan_polarized_basis(T, p, q, r, s);
                            break;
                        default:
                            resid = zero_vec(f, n);
                    }
                    if (!vec_is_zero(f, resid)) {
                        res.holds = false;
                        res.witness = {p + 1, q + 1, r + 1, s + 1};
                        res.detail = "basis tuple";
                        return res;
                    }
                }

    if (id == Identity::AlmostJordan) {
        auto grid = detail::sample_grid(f, n);
        for (std::size_t yi = 0; yi < grid.size(); ++yi)
            for (std::size_t xi = 0; xi < grid.size(); ++xi)
                if (!vec_is_zero(f, detail::almost_jordan_residual(A, grid[yi], grid[xi]))) {
                    res.holds = false;
                    res.witness = {int(yi), int(xi)};
                    res.detail = "sample grid";
                    return res;
                }
    }
    return res;
}

/// Span of pairwise products of two subspaces.
template <class F>
SubspaceBasis<F> subspace_product(const Algebra<F>& A, const SubspaceBasis<F>& u,
                                  const SubspaceBasis<F>& v) {
    const F& f = A.f;
    Mat<F> rows(f, u.dim() * v.dim(), A.n);
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < v.dim(); ++j) {
            Vec<F> a(A.n), b(A.n);
            for (int k = 0; k < A.n; ++k) {
                a[k] = u.basis.at(i, k);
                b[k] = v.basis.at(j, k);
            }
            Vec<F> w = multiply(A, a, b);
            for (int k = 0; k < A.n; ++k) rows.at(i * v.dim() + j, k) = w[k];
        }
    return SubspaceBasis<F>::from_rows(rows);
}

/// A^1 = A, A^k = sum_{i+j=k} A^i A^j, computed until it reaches zero or the
/// nilpotency bound 2^n is passed (products of more than 2^n factors vanish in
/// every nilpotent algebra of dimension n).
template <class F>
std::vector<SubspaceBasis<F>> power_filtration(const Algebra<F>& A) {
    const F& f = A.f;
    std::vector<SubspaceBasis<F>> chain;
    chain.push_back(SubspaceBasis<F>::full(f, A.n));
    long cap = (A.n >= 20) ? (1L << 20) : (1L << A.n);
    for (long k = 2; k <= cap + 1; ++k) {
        SubspaceBasis<F> acc(f, A.n);
        for (long i = 1; i <= k - i; ++i)
            acc = subspace_sum(acc, subspace_product(A, chain[i - 1], chain[k - i - 1]));
        chain.push_back(acc);
        if (acc.dim() == 0) break;
    }
    return chain;
}

template <class F>
bool is_nilpotent(const Algebra<F>& A) {
    auto chain = power_filtration(A);
    return chain.back().dim() == 0;
}

/// Ann(A) = {x : xA = 0}: kernel of the stacked maps x -> x e_j.
template <class F>
SubspaceBasis<F> annihilator(const Algebra<F>& A) {
    const F& f = A.f;
    Mat<F> stacked(f, A.n * A.n, A.n);
    for (int j = 0; j < A.n; ++j)
        for (int k = 0; k < A.n; ++k)
            for (int i = 0; i < A.n; ++i)
                stacked.at(j * A.n + k, i) = A.prod(i, j)[k];
    return kernel(stacked);
}

/// Transport structure constants along invertible P (columns of P are the new
/// basis vectors in old coordinates): [x,y]_new = P^{-1}(P x . P y).
template <class F>
Algebra<F> change_of_basis(const Algebra<F>& A, const Mat<F>& P) {
    const F& f = A.f;
    if (P.rows != A.n || P.cols != A.n) throw dimension_mismatch("change_of_basis: P shape");
    Mat<F> Pinv = inverse(P); // throws singular_matrix when P is not invertible
    Algebra<F> B(f, A.n, A.name);
    for (int i = 0; i < A.n; ++i)
        for (int j = i; j < A.n; ++j) {
            Vec<F> pi(A.n), pj(A.n);
            for (int k = 0; k < A.n; ++k) {
                pi[k] = P.at(k, i);
                pj[k] = P.at(k, j);
            }
            Vec<F> w = Pinv.apply(multiply(A, pi, pj));
            B.prod(i, j) = w;
        }
    return B;
}

/// Rank of a matrix of polynomials over the rational function field,
/// fraction-free Bareiss elimination with exact divisions.
inline int bareiss_rank(std::vector<std::vector<ParamPoly>> m) {
    if (m.empty()) return 0;
    int rows = int(m.size()), cols = int(m[0].size());
    ParamPoly prev = ParamPoly::constant(1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (!m[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]).divide_exact(prev);
            m[i][c] = ParamPoly();
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

/// Basis-independent invariants separating non-isomorphic algebras: power
/// filtration dimension profile, annihilator data, identity flags, dims of
/// the layer products A^i A^j, and the generic rank of left multiplication.
struct Fingerprint {
    std::vector<int> filtration_dims;
    bool nilpotent = false;
    int dim_ann = 0;
    int dim_sq = 0;
    int dim_ann_cap_sq = 0;
    bool ccd = false;
    bool jordan = false;
    std::vector<int> layer_product_dims; // (i,j) lex order, i <= j, i + j <= chain length
    int generic_l_rank = 0;

    bool operator==(const Fingerprint& o) const = default;

    std::string str() const {
        std::ostringstream os;
        os << "filt=[";
        for (std::size_t i = 0; i < filtration_dims.size(); ++i)
            os << (i ? "," : "") << filtration_dims[i];
        os << "] nilpotent=" << nilpotent << " dimAnn=" << dim_ann << " dimSq=" << dim_sq
           << " dimAnnCapSq=" << dim_ann_cap_sq << " ccd=" << ccd << " jordan=" << jordan
           << " layers=[";
        for (std::size_t i = 0; i < layer_product_dims.size(); ++i)
            os << (i ? "," : "") << layer_product_dims[i];
        os << "] genLrank=" << generic_l_rank;
        return os.str();
    }
};

inline Fingerprint fingerprint(const Algebra<RatField>& A) {
    Fingerprint fp;
    auto chain = power_filtration(A);
    for (auto& s : chain) fp.filtration_dims.push_back(s.dim());
    fp.nilpotent = chain.back().dim() == 0;
    auto ann = annihilator(A);
    fp.dim_ann = ann.dim();
    fp.dim_sq = chain.size() > 1 ? chain[1].dim() : 0;
    if (chain.size() > 1) fp.dim_ann_cap_sq = subspace_intersect(ann, chain[1]).dim();
    fp.ccd = check_identity(A, Identity::CCD).holds;
    fp.jordan = check_identity(A, Identity::JordanLinearized).holds;
    int len = int(chain.size());
    for (int i = 1; i <= len; ++i)
        for (int j = i; j <= len; ++j) {
            if (i + j > len + 1) continue;
            fp.layer_product_dims.push_back(subspace_product(A, chain[i - 1], chain[j - 1]).dim());
        }
    // generic rank of L_x for symbolic x = sum t_i e_i
    std::vector<std::vector<ParamPoly>> L(A.n, std::vector<ParamPoly>(A.n));
    for (int k = 0; k < A.n; ++k)
        for (int j = 0; j < A.n; ++j) {
            ParamPoly entry;
            for (int i = 0; i < A.n; ++i) {
                const Rational& c = A.prod(i, j)[k];
                if (c != 0)
                    entry = entry + ParamPoly::variable("t" + std::to_string(i)) * c;
            }
            L[k][j] = entry;
        }
    fp.generic_l_rank = bareiss_rank(L);
    return fp;
}

/// Algebra with polynomial structure constants in named parameters.
struct AlgebraSym {
    int n = 0;
    std::string name;
    std::vector<std::string> params;
    std::vector<std::vector<ParamPoly>> sc; // PairIndex order

    AlgebraSym() = default;
    AlgebraSym(int dim, std::string nm, std::vector<std::string> ps = {})
        : n(dim), name(std::move(nm)), params(std::move(ps)),
          sc(PairIndex(dim).count(), std::vector<ParamPoly>(dim)) {}

    std::vector<ParamPoly>& prod(int i, int j) { return sc[PairIndex(n).idx(i, j)]; }
    const std::vector<ParamPoly>& prod(int i, int j) const { return sc[PairIndex(n).idx(i, j)]; }

    bool operator==(const AlgebraSym& o) const { return n == o.n && sc == o.sc; }

    template <class F>
    Algebra<F> bind(const F& f, const std::map<std::string, typename F::Elem>& assign) const {
        Algebra<F> A(f, n, name);
        for (std::size_t t = 0; t < sc.size(); ++t)
            for (int k = 0; k < n; ++k) A.sc[t][k] = sc[t][k].eval(f, assign);
        return A;
    }

    AlgebraSym substitute(const std::map<std::string, ParamPoly>& subst) const {
        AlgebraSym r = *this;
        for (auto& v : r.sc)
            for (auto& p : v) p = p.substitute(subst);
        return r;
    }

    std::vector<ParamPoly> multiply_sym(const std::vector<ParamPoly>& x,
                                        const std::vector<ParamPoly>& y) const {
        std::vector<ParamPoly> r(n);
        for (int i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                ParamPoly c = x[i] * y[j];
                const auto& pv = prod(i, j);
                for (int k = 0; k < n; ++k)
                    if (!pv[k].is_zero()) r[k] = r[k] + c * pv[k];
            }
        }
        return r;
    }

    /// Transport along a rational matrix P; parameters stay symbolic.
    AlgebraSym change_of_basis_sym(const Mat<RatField>& P) const {
        Mat<RatField> Pinv = inverse(P);
        AlgebraSym B(n, name, params);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                std::vector<ParamPoly> pi(n), pj(n);
                for (int k = 0; k < n; ++k) {
                    pi[k] = ParamPoly::constant(P.at(k, i));
                    pj[k] = ParamPoly::constant(P.at(k, j));
                }
                auto w = multiply_sym(pi, pj);
                std::vector<ParamPoly> coords(n);
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        if (Pinv.at(k, l) != 0) coords[k] = coords[k] + w[l] * Pinv.at(k, l);
                B.prod(i, j) = coords;
            }
        return B;
    }
};

} // namespace ccd
