#pragma once

// Elements of K = F((pi)) that the library actually manipulates: finite
// F-linear combinations of powers of pi. Terms are kept sorted by
// exponent with nonzero coefficients, so valuation is the first entry.

#include <limits>
#include <vector>

#include "swanlab/residue.hpp"

namespace swanlab {

struct LaurentTerm {
    long exp;
    ResidueElem coeff;  // nonzero
    bool operator==(const LaurentTerm& o) const {
        return exp == o.exp && coeff == o.coeff;
    }
};

struct LaurentElem {
    std::vector<LaurentTerm> terms;  // strictly increasing exponents
    bool operator==(const LaurentElem& o) const { return terms == o.terms; }
    bool operator!=(const LaurentElem& o) const { return !(*this == o); }
};

// Valuation with +infinity for 0.
struct Valuation {
    bool finite;
    long v;  // meaningful when finite
    bool operator==(const Valuation& o) const {
        return finite == o.finite && (!finite || v == o.v);
    }
};

inline Valuation val_infinity() { return Valuation{false, 0}; }
inline Valuation val_of(long v) { return Valuation{true, v}; }
// a >= b in the valuation order (infinity is the largest)
inline bool val_ge(Valuation a, long b) { return !a.finite || a.v >= b; }

LaurentElem lau_zero();
LaurentElem lau_term(const FieldConfig& F, const ResidueElem& c, long exp);
LaurentElem lau_from_res(const FieldConfig& F, const ResidueElem& c);
bool lau_is_zero(const LaurentElem& a);
Valuation lau_valuation(const LaurentElem& a);
// coefficient of pi^exp (zero when absent)
ResidueElem lau_coeff(const FieldConfig& F, const LaurentElem& a, long exp);
// leading (lowest-exponent) coefficient; a must be nonzero
const ResidueElem& lau_leading(const LaurentElem& a);

LaurentElem lau_add(const FieldConfig& F, const LaurentElem& a,
                    const LaurentElem& b);
LaurentElem lau_neg(const FieldConfig& F, const LaurentElem& a);
LaurentElem lau_sub(const FieldConfig& F, const LaurentElem& a,
                    const LaurentElem& b);
LaurentElem lau_mul(const FieldConfig& F, const LaurentElem& a,
                    const LaurentElem& b);
LaurentElem lau_scale(const FieldConfig& F, const ResidueElem& c,
                      const LaurentElem& a);
LaurentElem lau_pow(const FieldConfig& F, const LaurentElem& a,
                    unsigned long long k);
// x^p with exponents multiplied by p and coefficients raised to the p.
LaurentElem lau_frobenius(const FieldConfig& F, const LaurentElem& a);
// Only single-term elements are invertible here; DivisionByZeroError else.
LaurentElem lau_inv(const FieldConfig& F, const LaurentElem& a);
bool lau_is_unit_monomial(const LaurentElem& a);

// Drop every term of exponent >= cut (used to inspect principal parts).
LaurentElem lau_truncate_above(const LaurentElem& a, long cut);

}  // namespace swanlab
