#include "doctest.h"

#include "swanlab/differentials.hpp"
#include "swanlab/errors.hpp"
#include "swanlab/parser.hpp"
#include "swanlab/ramification.hpp"
#include "swanlab/render.hpp"

using namespace swanlab;

namespace {
FieldConfig rational_field(Coeff p, unsigned e = 1) {
    return FieldConfig{GaloisField(p, e), ResidueKind::RationalFunction};
}

WittVec wv(const FieldConfig& F, std::initializer_list<const char*> comps) {
    WittVec x;
    for (auto* s : comps) x.push_back(parse_element(s, F));
    return x;
}
}  // namespace

TEST_CASE("reduction strips p-th power leading terms") {
    auto F = rational_field(3);
    auto out = reduce_representative(F, wv(F, {"pi^-3"}));
    CHECK(out.level == 1);
    CHECK(out.exact);
    CHECK(out.steps >= 1);
    CHECK(witt_level(3, out.rep) == 1);
}

TEST_CASE("classes can reduce all the way to zero") {
    auto F = rational_field(2);
    auto out = reduce_representative(F, wv(F, {"pi^-4+pi^-1"}));
    CHECK(out.level == 0);
    CHECK(out.exact);
    CHECK(lau_is_zero(out.rep[0]));
}

TEST_CASE("certified minimal representatives are left alone") {
    auto F = rational_field(2);
    auto x = wv(F, {"y*pi^-2"});
    auto out = reduce_representative(F, x);
    CHECK(out.level == 2);
    CHECK(out.exact);
    CHECK(out.rep == x);
    CHECK(out.steps == 0);
}

TEST_CASE("twist by frobenius preserves the class invariants") {
    auto F = rational_field(2);
    auto x = wv(F, {"y*pi^-2"});
    WittVec fx{lau_frobenius(F, x[0])};
    // F x = x + (F-1) x, same character
    CHECK(swan(F, fx) == swan(F, x));
    CHECK(swan_modified(F, fx) == swan_modified(F, x));
    CHECK(refined_swan(F, fx) == refined_swan(F, x));
}

TEST_CASE("theta places the component in the right slot") {
    auto F = rational_field(2);
    auto a = parse_element("y*pi^-1", F);
    auto t0 = theta(F, 2, a, 0);
    REQUIRE(t0.size() == 2);
    CHECK(lau_is_zero(t0[0]));
    CHECK(t0[1] == a);
    auto t1 = theta(F, 2, a, 1);
    CHECK(t1[0] == a);
    CHECK(lau_is_zero(t1[1]));
}

TEST_CASE("conductor report on a depth-two vector") {
    auto F = rational_field(2);
    auto rep = conductor_report(F, wv(F, {"pi^-1", "0"}));
    CHECK(rep.sw == 2);
    CHECK(rep.sw_exact);
    CHECK(rep.sw_mod == 2);
    REQUIRE(rep.rsw.has_value());
    CHECK(rep.rsw->n == 2);
    CHECK(render_res(F, rep.rsw->beta) == "1");
    CHECK(res_is_zero(rep.rsw->alpha));
    REQUIRE(rep.slope.has_value());
    CHECK(*rep.slope == 3);
    REQUIRE(rep.log_slope.has_value());
    CHECK(*rep.log_slope == 2);
    REQUIRE(rep.char_point.has_value());
    CHECK(*rep.char_point == graded_neg(F, *rep.rsw_mod));
    CHECK_FALSE(rep.rsw_mod_unsupported);
}

TEST_CASE("trivial classes have no refined data") {
    auto F = rational_field(3);
    auto x = wv(F, {"y^3+2"});
    CHECK(swan(F, x) == 0);
    CHECK(swan_modified(F, x) == 0);
    CHECK_THROWS_AS(refined_swan(F, x), OutOfTheoremRangeError);
    CHECK_THROWS_AS(log_critical_slope(F, x), OutOfTheoremRangeError);
    CHECK_THROWS_AS(critical_slope(F, x), OutOfTheoremRangeError);
}

TEST_CASE("the excluded corner p = 2, sw' = 1") {
    auto F = rational_field(2);
    auto x = wv(F, {"y*pi^-2"});  // sw = 2, sw' = 1
    CHECK(swan(F, x) == 2);
    CHECK(swan_modified(F, x) == 1);
    CHECK_THROWS_AS(refined_swan_modified(F, x), UnsupportedRangeError);
    CHECK_THROWS_AS(char_point(F, x), UnsupportedRangeError);
    // sw' = 1 also sits below the slope theorem
    CHECK_THROWS_AS(critical_slope(F, x), OutOfTheoremRangeError);
    // the log side is unaffected
    CHECK(log_critical_slope(F, x) == 2);
    CHECK(log_char_point(F, x) == graded_neg(F, refined_swan(F, x)));
}

TEST_CASE("starved budgets are reported, not silently wrong") {
    auto F = rational_field(2);
    ReduceOptions opts;
    opts.phase1_cap = 1;
    opts.search_budget = 0;
    auto x = wv(F, {"pi^-8"});  // needs three strip steps
    auto rep = conductor_report(F, x, opts);
    CHECK(rep.budget_hit);
    CHECK_FALSE(rep.sw_exact);
    CHECK(rep.sw >= 1);  // still an upper bound
    CHECK_THROWS_AS(swan(F, x, opts), ReductionBudgetError);
    // default budgets certify the same input easily
    CHECK(swan(F, x) == 1);
}

TEST_CASE("sections invert the refined conductor maps") {
    auto F = rational_field(3);
    GradedNormalForm nf;
    nf.basis = Basis::Log;
    nf.n = 6;  // n0 = 2, r = 1
    nf.n0 = 2;
    nf.r = 1;
    nf.rp = 0;
    nf.layers = {{parse_residue_element("y", F), res_zero(F)}};
    nf.x = parse_residue_element("y+1", F);
    auto v = rho_section(F, nf);
    auto rep = conductor_report(F, v);
    CHECK(rep.sw == 6);
    CHECK(rep.sw_exact);
    REQUIRE(rep.rsw_nf.has_value());
    CHECK(*rep.rsw_nf == nf);

    GradedNormalForm pf;
    pf.basis = Basis::Plain;
    pf.n = 2;  // r = ord_3(3) = 1, rp = 0
    pf.n0 = 0;  // unused in the plain basis
    pf.r = 1;
    pf.rp = 0;
    pf.layers = {{parse_residue_element("2", F), res_zero(F)}};
    pf.x = parse_residue_element("y", F);
    auto w = kappa_section(F, pf);
    auto prep = conductor_report(F, w);
    CHECK(prep.sw_mod == 2);
    REQUIRE(prep.rsw_mod_nf.has_value());
    CHECK(*prep.rsw_mod_nf == pf);
}

TEST_CASE("no section exists at the excluded corner") {
    auto F = rational_field(2);
    GradedNormalForm nf;
    nf.basis = Basis::Plain;
    nf.n = 1;
    nf.n0 = 0;
    nf.r = 1;  // ord_2(2)
    nf.rp = 0;
    nf.layers = {{res_one(F)}};
    nf.x = res_zero(F);
    CHECK_THROWS_AS(kappa_section(F, nf), UnsupportedRangeError);
}
