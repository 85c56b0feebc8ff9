#include "doctest.h"

#include "swanlab/errors.hpp"
#include "swanlab/parser.hpp"
#include "swanlab/render.hpp"
#include "swanlab/residue.hpp"

using namespace swanlab;

namespace {
FieldConfig rational_field(Coeff p, unsigned e = 1) {
    return FieldConfig{GaloisField(p, e), ResidueKind::RationalFunction};
}
}  // namespace

TEST_CASE("grammar basics") {
    auto F = rational_field(3);
    CHECK(parse_element("pi^-2", F) == lau_term(F, res_one(F), -2));
    CHECK(parse_element("2*pi^-1 + y^2", F) ==
          lau_add(F, lau_term(F, res_from_int(F, 2), -1),
                  lau_from_res(F, res_mul(F, res_y(F), res_y(F)))));
    CHECK(lau_is_zero(parse_element("0", F)));
    CHECK(parse_element("pi", F) == lau_term(F, res_one(F), 1));
    CHECK(parse_element(" ( y + 1 ) * pi ^ -2 ", F) ==
          parse_element("(y+1)*pi^-2", F));
}

TEST_CASE("coefficients may be rational in y") {
    auto F = rational_field(2);
    auto a = parse_element("(y+1)/y*pi^-2", F);
    auto c = lau_coeff(F, a, -2);
    CHECK(c == res_div(F, res_add(F, res_y(F), res_one(F)), res_y(F)));
    // equivalent spellings collapse to the same element
    CHECK(parse_element("((y+1)/y)*pi^-2", F) == a);
    CHECK(parse_element("(y^2+y)/(y^2)*pi^-2", F) == a);
}

TEST_CASE("arithmetic folds constants") {
    auto F = rational_field(5);
    CHECK(parse_element("2*3", F) == parse_element("1", F));
    CHECK(parse_element("pi^-1*pi^-1", F) == parse_element("pi^-2", F));
    CHECK(parse_element("(pi^-1+1)^2", F) ==
          parse_element("pi^-2+2*pi^-1+1", F));
    CHECK(parse_element("-pi^-3", F) == parse_element("4*pi^-3", F));
    CHECK(parse_element("1/2", F) == parse_element("3", F));
}

TEST_CASE("generator letter g") {
    auto F4 = FieldConfig{GaloisField(2, 2u), ResidueKind::Perfect};
    auto g = parse_element("g^2+g", F4);
    CHECK(g == lau_from_res(F4, res_from_gf(F4, F4.gf.one())));
    // over a prime field g degenerates to a constant
    auto F2 = rational_field(2);
    CHECK(res_is_constant(lau_coeff(F2, parse_element("g", F2), 0)));
}

TEST_CASE("y needs a rational residue field") {
    FieldConfig perfect{GaloisField(3, 1u), ResidueKind::Perfect};
    CHECK_THROWS_AS(parse_element("y*pi^-1", perfect), ParseError);
}

TEST_CASE("error positions point at the offending token") {
    auto F = rational_field(2);
    try {
        parse_element("pi^-2 + @", F);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 8);
    }
    try {
        parse_element("pi^", F);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position >= 2);
    }
    CHECK_THROWS_AS(parse_element("", F), ParseError);
    CHECK_THROWS_AS(parse_element("pi^-2 pi^-1", F), ParseError);
}

TEST_CASE("division by zero inside an expression") {
    auto F = rational_field(3);
    CHECK_THROWS_AS(parse_element("1/0", F), DivisionByZeroError);
    CHECK_THROWS_AS(parse_element("y/(y+y+y)", F), DivisionByZeroError);
}

TEST_CASE("negative powers only divide invertible elements") {
    auto F = rational_field(2);
    // pi-adic series with two terms have no inverse here
    CHECK_THROWS_AS(parse_element("(1+pi)^-1", F), Error);
    CHECK(parse_element("(y*pi^-2)^-1", F) ==
          parse_element("(1)/(y)*pi^2", F));
}

TEST_CASE("render and parse are mutually inverse on canonical strings") {
    auto F = rational_field(3, 2);
    for (const char* s :
         {"pi^-2", "2*pi^-1", "y*pi^-3+pi^-1", "(2*g+1)*pi^-1",
          "(y^2+2*y)*pi^-4+g*y*pi^-1+2", "(1)/(y+1)*pi^-5", "0"}) {
        auto x = parse_element(s, F);
        CHECK(parse_element(render_lau(F, x), F) == x);
    }
    CHECK(render_lau(F, parse_element("pi^-1+pi^-2", F)) == "pi^-2+pi^-1");
}

TEST_CASE("residue-level parser rejects pi") {
    auto F = rational_field(3);
    CHECK(parse_residue_element("(y+2)/(y+1)", F) ==
          res_div(F, res_add(F, res_y(F), res_from_int(F, 2)),
                  res_add(F, res_y(F), res_one(F))));
    CHECK_THROWS_AS(parse_residue_element("pi", F), ParseError);
}
