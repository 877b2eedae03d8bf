#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ccd/linalg.hpp"
#include "test_util.hpp"

using namespace ccd;
using ccdtest::Rng;

namespace {

template <class F>
Mat<F> from_rows(const F& f, std::vector<std::vector<long>> rows) {
    Mat<F> m(f, int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = f.from_int(rows[i][j]);
    return m;
}

// brute-force point membership over GF(2): all vectors in the row span
std::set<std::vector<std::uint32_t>> gf2_span_points(const Mat<GFpField>& m) {
    const GFpField& f = m.f;
    std::set<std::vector<std::uint32_t>> pts;
    for (std::uint32_t mask = 0; mask < (1u << m.rows); ++mask) {
        std::vector<std::uint32_t> v(m.cols, 0);
        for (int i = 0; i < m.rows; ++i)
            if (mask & (1u << i))
                for (int j = 0; j < m.cols; ++j) v[j] = f.add(v[j], m.at(i, j));
        pts.insert(v);
    }
    return pts;
}

} // namespace

TEST_CASE("echelon examples") {
    RatField q;
    auto id = Mat<RatField>::identity(q, 2);
    auto e1 = echelonize(id);
    CHECK(e1.rank == 2);
    CHECK(e1.mat == id);

    auto m = from_rows(q, {{1, 2}, {2, 4}});
    auto e2 = echelonize(m);
    CHECK(e2.rank == 1);
    CHECK(e2.mat == from_rows(q, {{1, 2}, {0, 0}}));

    GFpField g2(2);
    auto m3 = from_rows(g2, {{1, 1}, {1, 0}});
    auto e3 = echelonize(m3);
    CHECK(e3.rank == 2);
    CHECK(e3.mat == Mat<GFpField>::identity(g2, 2));
    // derived oracle: row spans agree pointwise over GF(2)
    CHECK(gf2_span_points(m3) == gf2_span_points(e3.mat));
}

TEST_CASE("echelon is idempotent with increasing pivots") {
    RatField q;
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        Mat<RatField> m(q, 4, 6);
        for (auto& x : m.a) x = q.from_int(rng.range(-4, 4));
        auto e = echelonize(m);
        auto e2 = echelonize(e.mat);
        CHECK(e.mat == e2.mat);
        for (std::size_t i = 1; i < e.pivots.size(); ++i) CHECK(e.pivots[i - 1] < e.pivots[i]);
        // row span preserved: mutual membership
        auto s1 = SubspaceBasis<RatField>::from_rows(m);
        auto s2 = SubspaceBasis<RatField>::from_rows(e.mat);
        CHECK(s1 == s2);
    }
}

TEST_CASE("kernel examples") {
    RatField q;
    Mat<RatField> zero(q, 3, 3);
    CHECK(kernel(zero).dim() == 3);
    CHECK(kernel(Mat<RatField>::identity(q, 3)).dim() == 0);

    auto m = from_rows(q, {{1, 2, 3}});
    auto k = kernel(m);
    CHECK(k.dim() == 2);
    CHECK(k.contains({q.from_int(-2), q.from_int(1), q.from_int(0)}));
    CHECK(k.contains({q.from_int(-3), q.from_int(0), q.from_int(1)}));
}

TEST_CASE("rank-nullity on random matrices") {
    RatField q;
    GFpField g5(5);
    Rng rng(23);
    for (int t = 0; t < 40; ++t) {
        int r = 1 + int(rng.next() % 5), c = 1 + int(rng.next() % 5);
        Mat<RatField> m(q, r, c);
        for (auto& x : m.a) x = q.from_int(rng.range(-3, 3));
        CHECK(kernel(m).dim() + echelonize(m).rank == c);
        Mat<GFpField> g(g5, r, c);
        for (auto& x : g.a) x = g5.from_int(rng.range(0, 4));
        CHECK(kernel(g).dim() + echelonize(g).rank == c);
    }
}

TEST_CASE("subspace operations") {
    RatField q;
    auto e1 = SubspaceBasis<RatField>::from_rows(from_rows(q, {{1, 0}}));
    auto e2 = SubspaceBasis<RatField>::from_rows(from_rows(q, {{0, 1}}));
    CHECK(subspace_sum(e1, e2).dim() == 2);
    CHECK(subspace_intersect(e1, e2).dim() == 0);
    CHECK(subspace_intersect(e1, e1) == e1);

    GFpField g2(2);
    auto a = SubspaceBasis<GFpField>::from_rows(from_rows(g2, {{1, 1, 0}, {0, 0, 1}}));
    auto b = SubspaceBasis<GFpField>::from_rows(from_rows(g2, {{0, 1, 0}, {0, 0, 1}}));
    auto inter = subspace_intersect(a, b);
    CHECK(inter.dim() == 1);
    CHECK(inter == SubspaceBasis<GFpField>::from_rows(from_rows(g2, {{0, 0, 1}})));
    // brute-force oracle over the 8 points of GF(2)^3
    std::set<std::vector<std::uint32_t>> pts;
    auto pa = gf2_span_points(a.basis), pb = gf2_span_points(b.basis);
    for (auto& v : pa)
        if (pb.count(v)) pts.insert(v);
    CHECK(pts == gf2_span_points(inter.basis));
}

TEST_CASE("grassmann dimension formula") {
    RatField q;
    Rng rng(37);
    for (int t = 0; t < 40; ++t) {
        int n = 4 + int(rng.next() % 2);
        Mat<RatField> ra(q, 1 + int(rng.next() % 3), n), rb(q, 1 + int(rng.next() % 3), n);
        for (auto& x : ra.a) x = q.from_int(rng.range(-2, 2));
        for (auto& x : rb.a) x = q.from_int(rng.range(-2, 2));
        auto a = SubspaceBasis<RatField>::from_rows(ra);
        auto b = SubspaceBasis<RatField>::from_rows(rb);
        CHECK(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("solve and inverse") {
    RatField q;
    auto m = from_rows(q, {{2, 1}, {1, 1}});
    auto inv = inverse(m);
    CHECK(m * inv == Mat<RatField>::identity(q, 2));
    auto sol = solve(m, {q.from_int(3), q.from_int(2)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == rat(1));
    CHECK((*sol)[1] == rat(1));
    auto sing = from_rows(q, {{1, 2}, {2, 4}});
    CHECK_THROWS_AS(inverse(sing), singular_matrix);
    CHECK_FALSE(solve(sing, {q.from_int(1), q.from_int(0)}).has_value());
    Mat<GFpField> mixed1(GFpField(3), 1, 1), mixed2(GFpField(5), 1, 1);
    CHECK_THROWS_AS((void)(mixed1 * mixed2), field_mismatch);
    auto s2 = SubspaceBasis<RatField>::from_rows(from_rows(q, {{1, 0}}));
    auto s3 = SubspaceBasis<RatField>::from_rows(from_rows(q, {{1, 0, 0}}));
    CHECK_THROWS_AS(subspace_sum(s2, s3), dimension_mismatch);
    CHECK_THROWS_AS(subspace_intersect(s2, s3), dimension_mismatch);
}
