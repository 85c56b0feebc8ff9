#include "doctest.h"

#include "swanlab/oracle.hpp"
#include "swanlab/parser.hpp"
#include "swanlab/ramification.hpp"

using namespace swanlab;

namespace {
FieldConfig rational_field(Coeff p) {
    return FieldConfig{GaloisField(p, 1u), ResidueKind::RationalFunction};
}
}  // namespace

TEST_CASE("exhaustive search confirms trivial classes") {
    auto F = rational_field(2);
    auto x = WittVec{parse_element("pi^-4+pi^-1", F)};
    auto out = brute_reduce(F, x, 5, 2, 20000);
    CHECK(out.bound == 0);
    CHECK(out.explored > 0);
    CHECK(witt_level(2, out.rep) == 0);
}

TEST_CASE("exhaustive search agrees with the fast reduction") {
    auto F = rational_field(3);
    for (const char* s : {"pi^-3", "2*pi^-2", "pi^-9", "y*pi^-1"}) {
        auto Fr = (s[0] == 'y') ? rational_field(3) : F;
        auto x = WittVec{parse_element(s, Fr)};
        auto out = brute_reduce(Fr, x, 7, 2, 30000);
        CHECK(out.bound == swan(Fr, x));
    }
}

TEST_CASE("witt sum law survives randomized ghost checks") {
    auto r2 = verify_q_identity(2, 1, 4, 500, 12345);
    CHECK(r2.failures == 0);
    CHECK(r2.trials == 500);
    auto r3 = verify_q_identity(3, 1, 3, 200, 999);
    CHECK(r3.failures == 0);
}

TEST_CASE("sampled generators land in the stated filtration") {
    auto F = rational_field(2);
    auto rep = fil_prime_generator_sample(F, 1, 4, 200, 777);
    CHECK(rep.failures == 0);
    CHECK(rep.trials > 0);
}
