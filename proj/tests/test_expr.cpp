#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccd/expr.hpp"

using namespace ccd;

TEST_CASE("literals and evaluation") {
    RatField q;
    CHECK(CoeffExpr::parse("2/3").bind(q, {}) == rat(2, 3));
    CHECK(CoeffExpr::parse("-7").bind(q, {}) == rat(-7));
    CHECK(CoeffExpr::parse("(a+1)").bind(q, {{"a", rat(2)}}) == rat(3));
    CHECK(CoeffExpr::parse("a^2 - 1").bind(q, {{"a", rat(-1)}}) == rat(0));
    CHECK(CoeffExpr::parse("2*a*b - b^2").bind(q, {{"a", rat(3)}, {"b", rat(1, 2)}}) ==
          rat(3) - rat(1, 4));
    CHECK(CoeffExpr::parse("a^0").bind(q, {{"a", rat(5)}}) == rat(1));
    GFpField g7(7);
    CHECK(CoeffExpr::parse("1/2").bind(g7, {}) == 4); // 2 * 4 = 1 mod 7
}

TEST_CASE("grammar rejections carry byte offsets") {
    CHECK_THROWS_AS(CoeffExpr::parse("2a"), parse_error);      // implicit multiplication
    CHECK_THROWS_AS(CoeffExpr::parse("a b"), parse_error);
    CHECK_THROWS_AS(CoeffExpr::parse("(a+1"), parse_error);
    CHECK_THROWS_AS(CoeffExpr::parse("a^-1"), parse_error);    // exponent must be nonnegative
    CHECK_THROWS_AS(CoeffExpr::parse("1/0"), parse_error);
    CHECK_THROWS_AS(CoeffExpr::parse("-a"), parse_error);      // '-' only signs literals
    CHECK_THROWS_AS(CoeffExpr::parse(""), parse_error);
    try {
        CoeffExpr::parse("a + $");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.offset == 4);
    }
}

TEST_CASE("parse -> print -> parse is a fixed point") {
    for (const char* text : {"2/3", "a^2 - 1", "(a+1)*(a-1)", "-2*b + 1/3", "a*b*c",
                             "(a+3)*(b-1/2)^2", "0", "-1*a", "a^2*b - a*b^2 + 7"}) {
        auto e1 = CoeffExpr::parse(text);
        std::string printed = e1.print();
        auto e2 = CoeffExpr::parse(printed);
        CHECK(e2.print() == printed);
        CHECK(e1.poly() == e2.poly());
    }
    // canonical polynomial comparison across different spellings
    CHECK(CoeffExpr::parse("(a+1)*(a-1)").poly() == CoeffExpr::parse("a^2 - 1").poly());
}

TEST_CASE("unknown parameter at bind time") {
    RatField q;
    CHECK_THROWS_AS(CoeffExpr::parse("a+z").bind(q, {{"a", rat(1)}}), unknown_parameter);
}

TEST_CASE("substitution") {
    auto p = CoeffExpr::parse("a^2 + b").poly();
    auto swapped = p.substitute({{"a", ParamPoly::variable("b")}, {"b", ParamPoly::variable("a")}});
    CHECK(swapped == CoeffExpr::parse("b^2 + a").poly());
    auto negated = p.substitute({{"b", -ParamPoly::variable("b")}});
    CHECK(negated == CoeffExpr::parse("a^2 - b").poly());
}

TEST_CASE("exact polynomial division") {
    auto num = CoeffExpr::parse("a^2 - b^2").poly();
    auto den = CoeffExpr::parse("a - b").poly();
    CHECK(num.divide_exact(den) == CoeffExpr::parse("a + b").poly());
    CHECK_THROWS(CoeffExpr::parse("a^2 + 1").poly().divide_exact(den));
}
