#pragma once

// Characters of the absolute Galois group of K presented as Witt vectors
// modulo (F-1), their conductors sw / sw' with the refined values rsw /
// rsw', the explicit sections of the graded maps, and the slope and
// characteristic-point outputs derived from them.

#include <optional>

#include "swanlab/differentials.hpp"

namespace swanlab {

struct ReduceOptions {
    unsigned long phase1_cap = 0;  // 0 picks a cap from the input size
    unsigned long search_budget = 4000;
    unsigned search_depth = 3;
};

struct ReduceOutcome {
    WittVec rep;
    long level = 0;
    bool exact = true;  // level certified (graded certificate or level 0)
    unsigned long steps = 0;
};

struct ConductorReport {
    WittVec reduced;
    unsigned long steps = 0;
    // some bounded search gave up; the affected values are flagged or absent
    bool budget_hit = false;

    long sw = 0;
    bool sw_exact = true;  // false: sw is an upper bound only
    std::optional<GradedForm> rsw;  // log basis, level sw; absent when sw = 0
    std::optional<GradedNormalForm> rsw_nf;

    long sw_mod = 0;
    bool sw_mod_exact = true;
    // plain basis, level sw_mod; absent when sw_mod = 0 or unsupported
    std::optional<GradedForm> rsw_mod;
    std::optional<GradedNormalForm> rsw_mod_nf;
    bool rsw_mod_unsupported = false;  // exactly the case p = 2, sw_mod = 1

    std::optional<long> slope;            // sw_mod + 1 when sw_mod > 1
    std::optional<long> log_slope;        // sw when sw >= 1
    std::optional<GradedForm> char_point;      // -rsw_mod
    std::optional<GradedForm> log_char_point;  // -rsw
};

// The class of (0, ..., a, ..., 0) with a in slot witt_length-1-j, so the
// vector V^(witt_length-1-j) of (a, 0, ...). Requires j < witt_length.
WittVec theta(const FieldConfig& F, std::size_t witt_length,
              const LaurentElem& a, unsigned j);

// Minimal-filtration representative of the class of x.
//
// Phase 1 repeatedly kills leading terms of depth-carrying components
// whose valuation is divisible by p and whose leading coefficient is a
// p-th power. On the result, gr_n of the Witt differential is a
// certificate that the level is exactly n; if it vanishes, a bounded
// breadth-first search over single-monomial (F-1)-moves runs, and on
// failure the outcome carries exact = false (level is an upper bound).
ReduceOutcome reduce_representative(const FieldConfig& F, const WittVec& x,
                                    const ReduceOptions& opts = {});

// Everything at once; the cheapest way to get consistent values.
ConductorReport conductor_report(const FieldConfig& F, const WittVec& x,
                                 const ReduceOptions& opts = {});

// Convenience accessors over conductor_report. These throw
// ReductionBudgetError when the value could not be certified, and the
// indicated range errors when the value does not exist.
long swan(const FieldConfig& F, const WittVec& x,
          const ReduceOptions& opts = {});
GradedForm refined_swan(const FieldConfig& F, const WittVec& x,
                        const ReduceOptions& opts = {});  // needs sw >= 1
long swan_modified(const FieldConfig& F, const WittVec& x,
                   const ReduceOptions& opts = {});
// needs sw' >= 1, and (p, sw') != (2, 1)
GradedForm refined_swan_modified(const FieldConfig& F, const WittVec& x,
                                 const ReduceOptions& opts = {});
long critical_slope(const FieldConfig& F, const WittVec& x,
                    const ReduceOptions& opts = {});  // needs sw' > 1
long log_critical_slope(const FieldConfig& F, const WittVec& x,
                        const ReduceOptions& opts = {});  // needs sw >= 1
GradedForm char_point(const FieldConfig& F, const WittVec& x,
                      const ReduceOptions& opts = {});
GradedForm log_char_point(const FieldConfig& F, const WittVec& x,
                          const ReduceOptions& opts = {});

// Sections of the graded conductor maps: a Witt vector whose class has
// swan (resp. swan_modified) equal to nf.n and refined value reassembling
// exactly to nf. The context length is the smallest that fits nf.
WittVec rho_section(const FieldConfig& F, const GradedNormalForm& nf);
WittVec kappa_section(const FieldConfig& F, const GradedNormalForm& nf);

}  // namespace swanlab
