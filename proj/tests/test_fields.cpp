#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccd/fields.hpp"

using namespace ccd;

TEST_CASE("rationals are exact and canonical") {
    Rational a = rat(2, 4);
    CHECK(a == rat(1, 2));
    CHECK(rat_str(a) == "1/2");
    CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
    CHECK(rat(-4, 6).get_den() == 3); // positive denominator
    RatField f;
    CHECK(f.eq(f.div(f.from_int(1), f.from_int(3)), rat(1, 3)));
    CHECK_THROWS(f.inv(f.zero()));
}

TEST_CASE("GF(p) arithmetic") {
    GFpField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.from_int(-1) == 6);
    CHECK_THROWS_AS(GFpField(6), std::invalid_argument);
    CHECK_THROWS_AS(GFpField(1), std::invalid_argument);
    GFpField big(2147483647); // 2^31 - 1 is prime
    CHECK(big.mul(big.p - 1, big.p - 1) == 1);
}

TEST_CASE("Q(w) field axioms") {
    QOmegaField f;
    auto w = f.omega();
    // 1 + w + w^2 = 0
    auto w2 = f.mul(w, w);
    CHECK(f.is_zero(f.add(f.one(), f.add(w, w2))));
    // (a+bw) w^3 = a+bw
    OmegaElem x{rat(3, 2), rat(-5, 7)};
    auto w3 = f.mul(w2, w);
    CHECK(f.eq(w3, f.one()));
    CHECK(f.eq(f.mul(x, w3), x));
    // inverse
    CHECK(f.eq(f.mul(x, f.inv(x)), f.one()));
    CHECK(f.eq(f.mul(w, f.inv(w)), f.one()));
    CHECK_THROWS(f.inv(f.zero()));
    // distributivity spot check
    OmegaElem y{rat(1), rat(4)};
    CHECK(f.eq(f.mul(f.add(x, y), w), f.add(f.mul(x, w), f.mul(y, w))));
}
