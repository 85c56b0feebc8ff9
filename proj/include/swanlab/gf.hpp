#pragma once

// Arithmetic in GF(p^e) presented as GF(p)[t]/(modulus).
//
// Elements are coefficient vectors of length e over GF(p), least
// significant first. All operations are exact; there is no floating
// point anywhere in this library.

#include <cstdint>
#include <vector>

#include "swanlab/errors.hpp"

namespace swanlab {

using Coeff = std::uint32_t;  // always reduced into [0, p)

// A monic irreducible polynomial over GF(p), lowest degree first,
// leading coefficient 1. Degree e >= 1.
using ModulusPoly = std::vector<Coeff>;

struct GFElem {
    // size == e, entries in [0, p). Invariant maintained by GaloisField.
    std::vector<Coeff> c;

    bool operator==(const GFElem& o) const { return c == o.c; }
    bool operator!=(const GFElem& o) const { return !(*this == o); }
};

class GaloisField {
  public:
    // Conway polynomial for (p, e) if tabulated, else ConfigError.
    GaloisField(Coeff p, unsigned e);
    // User-supplied modulus; verified monic irreducible of degree e >= 1.
    GaloisField(Coeff p, ModulusPoly modulus);

    Coeff p() const { return p_; }
    unsigned e() const { return e_; }
    // q = p^e as a 64-bit value; the envelope keeps this small.
    std::uint64_t q() const { return q_; }
    const ModulusPoly& modulus() const { return mod_; }

    GFElem zero() const;
    GFElem one() const;
    // The residue class of t (only meaningful for e > 1, but defined always).
    GFElem gen() const;
    // n mod p embedded in the prime field.
    GFElem from_int(long long n) const;

    bool is_zero(const GFElem& a) const;
    GFElem add(const GFElem& a, const GFElem& b) const;
    GFElem sub(const GFElem& a, const GFElem& b) const;
    GFElem neg(const GFElem& a) const;
    GFElem mul(const GFElem& a, const GFElem& b) const;
    GFElem inv(const GFElem& a) const;  // DivisionByZeroError on 0
    GFElem pow(const GFElem& a, unsigned long long k) const;

    GFElem frobenius(const GFElem& a) const;      // a^p
    GFElem frobenius_inv(const GFElem& a) const;  // the unique p-th root

    // Iterated p-th root: b with b^(p^r) == a. Always exists here.
    GFElem iterated_root(const GFElem& a, unsigned r) const;

    bool operator==(const GaloisField& o) const {
        return p_ == o.p_ && mod_ == o.mod_;
    }

  private:
    void init();
    Coeff p_;
    unsigned e_;
    std::uint64_t q_;
    ModulusPoly mod_;
};

// Conway polynomial lookup; ConfigError when (p, e) is not tabulated.
ModulusPoly conway_polynomial(Coeff p, unsigned e);

// Monic irreducibility over GF(p) (Rabin's criterion); used to validate
// user-supplied moduli.
bool is_irreducible_mod_p(Coeff p, const ModulusPoly& f);

}  // namespace swanlab
