#include "doctest.h"

#include "swanlab/errors.hpp"
#include "swanlab/laurent.hpp"
#include "swanlab/parser.hpp"
#include "swanlab/residue.hpp"

using namespace swanlab;

namespace {
FieldConfig rational_field(Coeff p) {
    return FieldConfig{GaloisField(p, 1u), ResidueKind::RationalFunction};
}
}  // namespace

TEST_CASE("terms stay sorted and trimmed") {
    auto F = rational_field(3);
    auto a = lau_add(F, lau_term(F, res_from_int(F, 2), 3),
                     lau_term(F, res_one(F), -2));
    REQUIRE(a.terms.size() == 2);
    CHECK(a.terms[0].exp == -2);
    CHECK(a.terms[1].exp == 3);
    CHECK(lau_valuation(a) == val_of(-2));
    // cancellation drops the term entirely
    auto b = lau_sub(F, a, lau_term(F, res_one(F), -2));
    REQUIRE(b.terms.size() == 1);
    CHECK(b.terms[0].exp == 3);
    CHECK(lau_is_zero(lau_sub(F, a, a)));
    CHECK(lau_valuation(lau_zero()) == val_infinity());
}

TEST_CASE("multiplication and powers") {
    auto F = rational_field(2);
    auto x = parse_element("pi^-1+pi", F);
    auto sq = lau_mul(F, x, x);
    // char 2: cross terms cancel
    CHECK(sq == parse_element("pi^-2+pi^2", F));
    CHECK(lau_pow(F, x, 2) == sq);
    CHECK(lau_pow(F, x, 0) == parse_element("1", F));
    CHECK(lau_mul(F, x, lau_zero()) == lau_zero());
}

TEST_CASE("frobenius multiplies exponents by p") {
    auto F = rational_field(3);
    auto x = parse_element("y*pi^-2+pi^5", F);
    auto fx = lau_frobenius(F, x);
    CHECK(fx == parse_element("y^3*pi^-6+pi^15", F));
    CHECK(fx == lau_pow(F, x, 3));
}

TEST_CASE("inverse of a unit monomial") {
    auto F = rational_field(3);
    auto t = parse_element("2*y*pi^-4", F);
    CHECK(lau_is_unit_monomial(t));
    CHECK(lau_mul(F, t, lau_inv(F, t)) == parse_element("1", F));
    CHECK_THROWS_AS(lau_inv(F, lau_zero()), DivisionByZeroError);
    // series inversion is out of scope: only monomials invert
    auto s = parse_element("1+pi", F);
    CHECK_FALSE(lau_is_unit_monomial(s));
    CHECK_THROWS_AS(lau_inv(F, s), Error);
}

TEST_CASE("coefficient extraction and truncation") {
    auto F = rational_field(2);
    auto x = parse_element("y*pi^-3+pi^-1+y^2", F);
    CHECK(lau_coeff(F, x, -3) == res_y(F));
    CHECK(res_is_zero(lau_coeff(F, x, -2)));
    CHECK(lau_leading(x) == res_y(F));
    auto neg = lau_truncate_above(x, 0);
    CHECK(neg == parse_element("y*pi^-3+pi^-1", F));
    CHECK(lau_is_zero(lau_truncate_above(x, -4)));
}

TEST_CASE("scaling by residue elements") {
    auto F = rational_field(5);
    auto x = parse_element("pi^-1+2*pi", F);
    auto c = parse_residue_element("(y)/(y+1)", F);
    auto sc = lau_scale(F, c, x);
    CHECK(lau_coeff(F, sc, -1) == c);
    CHECK(lau_coeff(F, sc, 1) == res_mul(F, res_from_int(F, 2), c));
    CHECK(lau_is_zero(lau_scale(F, res_zero(F), x)));
}
