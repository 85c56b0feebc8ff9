#include "doctest.h"

#include "swanlab/differentials.hpp"
#include "swanlab/errors.hpp"
#include "swanlab/parser.hpp"
#include "swanlab/residue.hpp"

using namespace swanlab;

namespace {
FieldConfig rational_field(Coeff p, unsigned e = 1) {
    return FieldConfig{GaloisField(p, e), ResidueKind::RationalFunction};
}

ResidueElem pr(const FieldConfig& F, const std::string& s) {
    return parse_residue_element(s, F);
}
}  // namespace

TEST_CASE("d_local splits into dy and dlog pi parts") {
    auto F3 = rational_field(3);
    auto w = d_local(F3, parse_element("y*pi^-2", F3));
    CHECK(w.f == parse_element("pi^-2", F3));
    CHECK(w.b == parse_element("y*pi^-2", F3));
    // at p = 2 the exponent -2 vanishes mod p
    auto F2 = rational_field(2);
    auto w2 = d_local(F2, parse_element("y*pi^-2", F2));
    CHECK(w2.f == parse_element("pi^-2", F2));
    CHECK(lau_is_zero(w2.b));
    // p-th powers are closed
    CHECK(kform_is_zero(d_local(F3, parse_element("y^3*pi^-3", F3))));
}

TEST_CASE("cartier kills exactly the exact forms") {
    auto F = rational_field(2);
    // C(f^2 y dy) = f dy
    auto w = ResidueForm{pr(F, "y^3+y")};  // (y+1)^2 y
    CHECK(cartier(F, w) == ResidueForm{pr(F, "y+1")});
    // d(y^3) = y^2 dy is exact, C sends it to 0
    CHECK(rform_is_zero(cartier(F, d_residue(F, pr(F, "y^3")))));
    // dy/y is a Cartier fixed point
    auto dlog = ResidueForm{pr(F, "(1)/(y)")};
    CHECK(cartier(F, dlog) == dlog);
    CHECK(cartier(F, cartier_inverse(F, ResidueForm{pr(F, "(y+1)/(y^2+y+1)")})) ==
          ResidueForm{pr(F, "(y+1)/(y^2+y+1)")});
}

TEST_CASE("boundary filtration via iterated cartier") {
    auto F = rational_field(2);
    auto exact = d_residue(F, pr(F, "y^3"));  // y^2 dy
    CHECK(in_boundary_filtration(F, exact, 1));
    CHECK_FALSE(in_boundary_filtration(F, exact, 0));
    auto ydy = ResidueForm{pr(F, "y")};
    CHECK_FALSE(in_boundary_filtration(F, ydy, 1));
    CHECK(in_boundary_filtration(F, ydy, 2));
    auto dlog = ResidueForm{pr(F, "(1)/(y)")};
    CHECK_FALSE(in_boundary_filtration(F, dlog, 5));
    CHECK(in_boundary_filtration(F, rform_zero(F), 0));
}

TEST_CASE("boundary_layer matches its closed form") {
    auto F = rational_field(3);
    // layer 0 with coefficients (c_1, c_2): sum_k k c_k^3 y^(k-1) dy
    auto w = boundary_layer(F, 0, {pr(F, "1"), pr(F, "2")});
    // 1*1 + 2*(2^3 = 2) y = 1 + y
    CHECK(w == ResidueForm{pr(F, "1+y")});
    CHECK(in_boundary_filtration(F, w, 1));
    // layer 1 lives one step deeper
    auto w1 = boundary_layer(F, 1, {pr(F, "y"), res_zero(F)});
    CHECK(in_boundary_filtration(F, w1, 2));
    CHECK_FALSE(in_boundary_filtration(F, w1, 1));
}

TEST_CASE("filtration membership of local forms") {
    auto F = rational_field(2);
    auto w = d_local(F, parse_element("y*pi^-2", F));
    CHECK(form_in_filtration(w, 2, Basis::Log));
    CHECK_FALSE(form_in_filtration(w, 1, Basis::Log));
    // plain shifts the reading frame by one
    CHECK(form_in_filtration(w, 1, Basis::Plain));
    CHECK_FALSE(form_in_filtration(w, 0, Basis::Plain));
    CHECK(form_in_filtration(kform_zero(), -1, Basis::Log));
}

TEST_CASE("graded_class reads the right coefficients") {
    auto F = rational_field(3);
    auto w = witt_differential(F, WittVec{parse_element("y*pi^-2", F)});
    auto g = graded_class(F, w, 2, Basis::Log);
    CHECK(g.alpha == pr(F, "1"));
    CHECK(g.beta == pr(F, "y"));
    CHECK(residue_map(g) == pr(F, "y"));
    CHECK(graded_neg(F, g) ==
          GradedForm{Basis::Log, 2, pr(F, "2"), pr(F, "2*y")});
    CHECK_THROWS_AS(graded_class(F, w, 1, Basis::Log), NotInFiltrationError);
}

TEST_CASE("log normal form with a pure layer part") {
    auto F = rational_field(2);
    auto g = GradedForm{Basis::Log, 2, pr(F, "1"), res_zero(F)};
    auto nf = graded_normal_form(F, g);
    CHECK(nf.n0 == 1);
    CHECK(nf.r == 1);
    REQUIRE(nf.layers.size() == 1);
    REQUIRE(nf.layers[0].size() == 1);
    CHECK(nf.layers[0][0] == pr(F, "1"));
    CHECK(res_is_zero(nf.x));
    CHECK(reassemble_normal_form(F, nf) == g);
    CHECK_FALSE(normal_form_is_zero(nf));
}

TEST_CASE("plain normal form splits dpi and layer parts") {
    auto F = rational_field(3);
    // n = 2: r = ord_3(3) = 1, rp = ord_3(2) = 0
    auto g = GradedForm{Basis::Plain, 2, pr(F, "1+y"), pr(F, "2")};
    auto nf = graded_normal_form(F, g);
    CHECK(nf.r == 1);
    CHECK(nf.rp == 0);
    CHECK(nf.x == pr(F, "2"));
    REQUIRE(nf.layers.size() == 1);
    REQUIRE(nf.layers[0].size() == 2);
    CHECK(nf.layers[0][0] == pr(F, "1"));
    CHECK(nf.layers[0][1] == pr(F, "2"));
    CHECK(reassemble_normal_form(F, nf) == g);
}

TEST_CASE("classes outside the image are rejected") {
    auto F = rational_field(2);
    // n = 1: the dy part must equal dx for x = beta
    CHECK_THROWS_AS(
        graded_normal_form(F, GradedForm{Basis::Log, 1, res_zero(F), res_y(F)}),
        NotInImageError);
    // n = 2: beta must be a square
    CHECK_THROWS_AS(
        graded_normal_form(F, GradedForm{Basis::Log, 2, res_zero(F), res_y(F)}),
        NotInImageError);
    // but (dy, dlog-part y) at n = 1 is d(y) + y dlog pi tensor pi^-1
    auto ok = graded_normal_form(F, GradedForm{Basis::Log, 1, pr(F, "1"), res_y(F)});
    CHECK(ok.x == res_y(F));
    CHECK(ok.layers.empty());
}

TEST_CASE("perfect residue field forces alpha = 0") {
    FieldConfig F{GaloisField(2, 2u), ResidueKind::Perfect};
    auto g = F.gf.gen();
    auto w = witt_differential(F, WittVec{lau_term(F, res_from_gf(F, g), -1)});
    CHECK(lau_is_zero(w.f));
    auto cls = graded_class(F, w, 1, Basis::Log);
    CHECK(res_is_zero(cls.alpha));
    CHECK(cls.beta == res_from_gf(F, g));
    // every beta is an iterated power here
    auto nf = graded_normal_form(F, GradedForm{Basis::Log, 2, res_zero(F),
                                               res_from_gf(F, g)});
    REQUIRE(nf.layers.size() == 1);
    CHECK(nf.layers[0].empty());
    CHECK(reassemble_normal_form(F, nf).beta == res_from_gf(F, g));
}
