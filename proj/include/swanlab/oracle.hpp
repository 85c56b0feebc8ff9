#pragma once

// Independent referees for the main algorithms: a brute-force reduction
// search, random validation of the rescale-difference identity over a
// truncated polynomial ring, and generator-based sampling of the
// modified filtration.

#include <cstdint>
#include <string>

#include "swanlab/witt.hpp"

namespace swanlab {

struct BruteOutcome {
    WittVec rep;
    long bound = 0;  // an upper bound for the true conductor
    unsigned long explored = 0;
};

// Breadth-first search over x (+) (F-1)(single-monomial vector), monomials
// c y^k pi^j with j in [-exp_bound, 0], k < p, c ranging over GF(p)^*
// multiples of 1 and of the p-th roots of coefficients met along the way.
BruteOutcome brute_reduce(const FieldConfig& F, const WittVec& x,
                          long exp_bound, unsigned depth,
                          unsigned long budget = 200000);

struct TrialReport {
    unsigned long trials = 0;
    unsigned long failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
};

// Checks x' (-) x == (Q_0, ..., Q_m)(x, y) with x'_i = x_i (1 + y_i),
// on random samples over the finite ring GF(p)[t]/(t^k).
TrialReport verify_q_identity(Coeff p, unsigned m, unsigned k,
                              unsigned long trials, std::uint64_t seed);

// Both directions of the componentwise description of fil'_n inside
// W_(m+1): generator samples satisfy the componentwise test, and
// componentwise members decompose as u (+) V^(m+1-mp)(w).
TrialReport fil_prime_generator_sample(const FieldConfig& F, unsigned m,
                                       long n, unsigned long trials,
                                       std::uint64_t seed);

}  // namespace swanlab
