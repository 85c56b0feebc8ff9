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

ResidueElem parse_res(const FieldConfig& F, const std::string& s) {
    return parse_residue_element(s, F);
}
}  // namespace

TEST_CASE("res_make reduces to lowest terms with monic denominator") {
    auto F = rational_field(3);
    // (y^2 - 1) / (2y - 2) = (y + 1) / 2 = 2(y + 1)
    auto a = parse_res(F, "(y^2+2)/(2*y+1)");
    CHECK(a == parse_res(F, "2*y+2"));
    CHECK(render_res(F, a) == "2*y+2");
    auto b = parse_res(F, "(y^2)/(y^3)");
    CHECK(render_res(F, b) == "(1)/(y)");
}

TEST_CASE("field operations in GF(3)(y)") {
    auto F = rational_field(3);
    auto y = res_y(F);
    auto one = res_one(F);
    auto u = res_div(F, one, res_add(F, y, one));          // 1/(y+1)
    auto v = res_div(F, y, res_add(F, y, one));            // y/(y+1)
    CHECK(res_add(F, u, v) == one);
    CHECK(res_mul(F, u, res_add(F, y, one)) == one);
    CHECK(res_inv(F, u) == res_add(F, y, one));
    CHECK(res_sub(F, v, v) == res_zero(F));
    CHECK_THROWS_AS(res_inv(F, res_zero(F)), DivisionByZeroError);
    CHECK_THROWS_AS(res_div(F, y, res_zero(F)), DivisionByZeroError);
}

TEST_CASE("res_pow handles negative exponents") {
    auto F = rational_field(2);
    auto y = res_y(F);
    CHECK(res_pow(F, y, -2) == res_inv(F, res_mul(F, y, y)));
    CHECK(res_pow(F, y, 0) == res_one(F));
    CHECK_THROWS_AS(res_pow(F, res_zero(F), -1), DivisionByZeroError);
}

TEST_CASE("derivative satisfies the quotient rule") {
    auto F = rational_field(5);
    auto f = parse_res(F, "y^3+2*y");
    auto g = parse_res(F, "y^2+1");
    auto q = res_div(F, f, g);
    auto num = res_sub(F, res_mul(F, res_derivative(F, f), g),
                       res_mul(F, f, res_derivative(F, g)));
    CHECK(res_derivative(F, q) == res_div(F, num, res_mul(F, g, g)));
    // constants and p-th powers die
    CHECK(res_is_zero(res_derivative(F, parse_res(F, "3"))));
    CHECK(res_is_zero(res_derivative(F, parse_res(F, "y^5"))));
    CHECK(res_derivative(F, parse_res(F, "y^6")) == parse_res(F, "y^5"));
}

TEST_CASE("p-basis decomposition is exact") {
    auto F = rational_field(3);
    auto f = parse_res(F, "(y^4+y+2)/(y^2+1)");
    auto parts = p_basis_decompose(F, f);
    REQUIRE(parts.size() == 3);
    auto sum = res_zero(F);
    for (unsigned j = 0; j < 3; ++j) {
        auto cube = res_pow(F, parts[j], 3);
        sum = res_add(F, sum, res_mul(F, cube, res_pow(F, res_y(F), j)));
    }
    CHECK(sum == f);
}

TEST_CASE("p-th powers are recognized and rooted") {
    auto F = rational_field(2);
    auto f = parse_res(F, "(y^2+1)/(y^4)");  // ((y+1)/y^2)^2
    CHECK(res_is_pth_power(F, f));
    CHECK(res_pth_root(F, f) == parse_res(F, "(y+1)/(y^2)"));
    CHECK_FALSE(res_is_pth_power(F, res_y(F)));
    CHECK_THROWS_AS(res_pth_root(F, res_y(F)), NotAPthPowerError);
}

TEST_CASE("iterated roots exist exactly for iterated powers") {
    auto F = rational_field(3);
    auto f = parse_res(F, "y+1");
    auto f9 = res_pow(F, f, 9);
    auto r = res_iterated_root(F, f9, 2);
    REQUIRE(r.has_value());
    CHECK(*r == f);
    CHECK_FALSE(res_iterated_root(F, res_y(F), 1).has_value());
    CHECK(res_iterated_root(F, f, 0) == f);
}

TEST_CASE("perfect residue field stays inside GF(q)") {
    FieldConfig F{GaloisField(2, 2u), ResidueKind::Perfect};
    auto g = res_from_gf(F, F.gf.gen());
    CHECK(res_is_constant(g));
    CHECK(res_is_constant(res_mul(F, g, g)));
    // every element is a p-th power here
    CHECK(res_is_pth_power(F, g));
    CHECK(res_pow(F, res_pth_root(F, g), 2) == g);
    CHECK(res_is_zero(res_derivative(F, g)));
    // the decomposition always has p slots; only slot 0 is live here
    auto parts = p_basis_decompose(F, g);
    REQUIRE(parts.size() == 2);
    CHECK(res_pow(F, parts[0], 2) == g);
    CHECK(res_is_zero(parts[1]));
}

TEST_CASE("polynomial division and gcd") {
    auto F = rational_field(2);
    auto a = parse_res(F, "y^3+y").num;  // y(y+1)^2
    auto b = parse_res(F, "y^2+y").num;  // y(y+1)
    Poly q, r;
    poly_divmod(F, a, b, q, r);
    CHECK(poly_add(F, poly_mul(F, q, b), r) == a);
    CHECK(poly_deg(r) < poly_deg(b));
    CHECK(poly_gcd(F, a, b) == b);
    CHECK(poly_is_zero(poly_gcd(F, poly_zero(), poly_zero())));
}
