#pragma once

// The residue field F of the local field K = F((pi)).
//
// F is either GF(q) itself ("perfect" kind) or the rational function
// field GF(q)(y) ("rational" kind). Elements of both kinds live in one
// type: a reduced fraction of polynomials in y over GF(q). For the
// perfect kind the invariant is that numerator and denominator are
// constants (denominator 1).

#include <optional>
#include <vector>

#include "swanlab/gf.hpp"

namespace swanlab {

enum class ResidueKind { Perfect, RationalFunction };

// Polynomial in y over GF(q), lowest degree first, no trailing zeros;
// empty vector is the zero polynomial.
struct Poly {
    std::vector<GFElem> c;
    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

struct FieldConfig {
    GaloisField gf;
    ResidueKind kind;

    FieldConfig(GaloisField g, ResidueKind k) : gf(std::move(g)), kind(k) {}
    Coeff p() const { return gf.p(); }
    bool has_y() const { return kind == ResidueKind::RationalFunction; }
    bool operator==(const FieldConfig& o) const {
        return gf == o.gf && kind == o.kind;
    }
};

// --- polynomial arithmetic over GF(q) --------------------------------------

Poly poly_zero();
Poly poly_const(const FieldConfig& F, const GFElem& a);
Poly poly_y(const FieldConfig& F);  // the monomial y
void poly_trim(const FieldConfig& F, Poly& a);
bool poly_is_zero(const Poly& a);
int poly_deg(const Poly& a);  // -1 for zero
Poly poly_add(const FieldConfig& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldConfig& F, const Poly& a, const Poly& b);
Poly poly_neg(const FieldConfig& F, const Poly& a);
Poly poly_mul(const FieldConfig& F, const Poly& a, const Poly& b);
Poly poly_pow(const FieldConfig& F, const Poly& a, unsigned long long k);
// division with remainder; b != 0
void poly_divmod(const FieldConfig& F, const Poly& a, const Poly& b, Poly& q,
                 Poly& r);
Poly poly_gcd(const FieldConfig& F, Poly a, Poly b);  // monic or zero
Poly poly_derivative(const FieldConfig& F, const Poly& a);
// coefficient-wise Frobenius inverse plus exponent division; requires
// every exponent with nonzero coefficient to be divisible by p.
std::optional<Poly> poly_pth_root(const FieldConfig& F, const Poly& a);

// --- reduced rational functions --------------------------------------------

struct ResidueElem {
    Poly num;
    Poly den;  // monic, coprime to num; den == 1 when num == 0
    bool operator==(const ResidueElem& o) const {
        return num == o.num && den == o.den;
    }
    bool operator!=(const ResidueElem& o) const { return !(*this == o); }
};

ResidueElem res_zero(const FieldConfig& F);
ResidueElem res_one(const FieldConfig& F);
ResidueElem res_from_gf(const FieldConfig& F, const GFElem& a);
ResidueElem res_from_int(const FieldConfig& F, long long n);
ResidueElem res_y(const FieldConfig& F);
ResidueElem res_make(const FieldConfig& F, Poly num, Poly den);  // reduces
bool res_is_zero(const ResidueElem& a);
bool res_is_constant(const ResidueElem& a);  // in GF(q)
ResidueElem res_add(const FieldConfig& F, const ResidueElem& a,
                    const ResidueElem& b);
ResidueElem res_sub(const FieldConfig& F, const ResidueElem& a,
                    const ResidueElem& b);
ResidueElem res_neg(const FieldConfig& F, const ResidueElem& a);
ResidueElem res_mul(const FieldConfig& F, const ResidueElem& a,
                    const ResidueElem& b);
ResidueElem res_div(const FieldConfig& F, const ResidueElem& a,
                    const ResidueElem& b);  // DivisionByZeroError
ResidueElem res_inv(const FieldConfig& F, const ResidueElem& a);
ResidueElem res_pow(const FieldConfig& F, const ResidueElem& a, long long k);
ResidueElem res_frobenius(const FieldConfig& F, const ResidueElem& a);  // a^p

// d/dy; identically zero for the perfect kind.
ResidueElem res_derivative(const FieldConfig& F, const ResidueElem& a);

// Decomposition f = sum_j f_j^p y^j over the p-basis {1, y, ..., y^(p-1)}.
// Returns exactly p entries. For the perfect kind only entry 0 is nonzero
// and equals the Frobenius inverse of f.
std::vector<ResidueElem> p_basis_decompose(const FieldConfig& F,
                                           const ResidueElem& f);

bool res_is_pth_power(const FieldConfig& F, const ResidueElem& f);
// NotAPthPowerError when f has a nonzero component off the 0-th p-basis slot.
ResidueElem res_pth_root(const FieldConfig& F, const ResidueElem& f);

// b with b^(p^r) == f, when it exists.
std::optional<ResidueElem> res_iterated_root(const FieldConfig& F,
                                             const ResidueElem& f, unsigned r);

}  // namespace swanlab
