// Shared test fixtures: hand-entered multiplication tables, a deterministic
// RNG, and random invertible rational matrices built from elementary moves.
#pragma once

#include <cstdint>
#include <tuple>

#include "ccd/algebra.hpp"
#include "ccd/expr.hpp"

namespace ccdtest {

using namespace ccd;

// xorshift64*, deterministic across platforms
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545F4914F6CDD1DULL;
    }
    long range(long lo, long hi) { // inclusive
        return lo + long(next() % std::uint64_t(hi - lo + 1));
    }
};

// products use 1-based indices, matching the classification tables
using ProductList = std::vector<std::tuple<int, int, std::vector<std::pair<int, long>>>>;

template <class F>
Algebra<F> make_alg(const F& f, int n, const ProductList& products, std::string name = "") {
    Algebra<F> A(f, n, std::move(name));
    for (auto& [i, j, outs] : products)
        for (auto& [k, c] : outs) A.set_product(i - 1, j - 1, k - 1, f.from_int(c));
    return A;
}

using SymProductList = std::vector<std::tuple<int, int, std::vector<std::pair<int, std::string>>>>;

inline AlgebraSym make_sym(int n, std::string name, std::vector<std::string> params,
                           const SymProductList& products) {
    AlgebraSym A(n, std::move(name), std::move(params));
    for (auto& [i, j, outs] : products)
        for (auto& [k, c] : outs) A.prod(i - 1, j - 1)[k - 1] = CoeffExpr::parse(c).poly();
    return A;
}

// --- fixtures from the classification tables ---

template <class F>
Algebra<F> fix_C3s_01(const F& f) { return make_alg(f, 3, {{1, 1, {{2, 1}}}}, "C3s_01"); }

template <class F>
Algebra<F> fix_C3s_02(const F& f) {
    return make_alg(f, 3, {{1, 1, {{2, 1}}}, {1, 2, {{3, 1}}}}, "C3s_02");
}

template <class F>
Algebra<F> fix_C3s_03(const F& f) { return make_alg(f, 3, {{1, 2, {{3, 1}}}}, "C3s_03"); }

template <class F>
Algebra<F> fix_C3_01(const F& f) {
    return make_alg(f, 3, {{1, 1, {{2, 1}}}, {2, 2, {{3, 1}}}}, "C3_01");
}

template <class F>
Algebra<F> fix_C4s_01(const F& f) { return make_alg(f, 4, {{1, 1, {{2, 1}}}}, "C4s_01"); }

template <class F>
Algebra<F> fix_C4_01(const F& f) {
    return make_alg(f, 4, {{1, 1, {{2, 1}}}, {2, 2, {{3, 1}}}}, "C4_01");
}

template <class F>
Algebra<F> fix_C5_25(const F& f) {
    return make_alg(f, 5,
                    {{1, 1, {{2, 1}}}, {1, 2, {{3, 1}}}, {1, 3, {{4, 1}}}, {2, 2, {{5, 1}}}},
                    "C5_25");
}

template <class F>
Algebra<F> fix_C5_41(const F& f) {
    return make_alg(f, 5, {{1, 1, {{2, 1}}}, {2, 2, {{5, 1}}}, {3, 4, {{5, 1}}}}, "C5_41");
}

template <class F>
Algebra<F> fix_C5_14(const F& f) {
    return make_alg(f, 5, {{1, 1, {{2, 1}}}, {2, 2, {{5, 1}}}, {3, 3, {{4, 1}}}}, "C5_14");
}

inline AlgebraSym fix_C5_13_sym() {
    return make_sym(5, "C5_13", {"a", "b"},
                    {{1, 1, {{2, "1"}}},
                     {1, 2, {{3, "1"}}},
                     {1, 3, {{5, "a+1"}}},
                     {2, 2, {{5, "a"}}},
                     {2, 4, {{5, "b"}}},
                     {4, 4, {{5, "1"}}}});
}

template <class F>
Vec<F> random_vec(const F& f, Rng& rng, int n, long lo = -3, long hi = 3) {
    Vec<F> v(n);
    for (int i = 0; i < n; ++i) v[i] = f.from_int(rng.range(lo, hi));
    return v;
}

/// Random invertible matrix: identity composed with elementary moves.
template <class F>
Mat<F> random_invertible(const F& f, Rng& rng, int n, int moves = 12) {
    Mat<F> m = Mat<F>::identity(f, n);
    for (int t = 0; t < moves; ++t) {
        int kind = int(rng.next() % 3);
        int i = int(rng.next() % n), j = int(rng.next() % n);
        if (kind == 0 && i != j) { // row add
            typename F::Elem c = f.from_int(rng.range(-2, 2));
            for (int k = 0; k < n; ++k) m.at(i, k) = f.add(m.at(i, k), f.mul(c, m.at(j, k)));
        } else if (kind == 1 && i != j) { // swap
            for (int k = 0; k < n; ++k) std::swap(m.at(i, k), m.at(j, k));
        } else { // scale by a unit
            long units[] = {1, -1, 2, -2};
            typename F::Elem c = f.from_int(units[rng.next() % 4]);
            for (int k = 0; k < n; ++k) m.at(i, k) = f.mul(c, m.at(i, k));
        }
    }
    return m;
}

} // namespace ccdtest
