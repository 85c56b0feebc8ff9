#pragma once

// Witt vectors of length m+1 over K (and, generically, over any ring of
// characteristic p, which the consistency oracle uses).
//
// The addition, negation, multiplication and rescale-difference
// polynomials are computed once per (p, m) by the ghost-component
// recursion over arbitrary-precision integers. Every division by a
// power of p is checked exact; reductions mod p are cached for
// evaluation. The construction doubles as a correctness argument, so
// the integer originals are kept for the symbolic tests.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "swanlab/laurent.hpp"

namespace swanlab {

using BigInt = boost::multiprecision::cpp_int;

// Supported envelope: vectors of length at most kMaxWittLength over
// p in {2, 3, 5}. One definition, used everywhere.
inline constexpr unsigned kMaxWittLength = 4;
bool witt_prime_supported(Coeff p);

// Monomial over at most 8 variables. Variables 0..m are the first
// operand's components, m+1..2m+1 the second's (when present).
struct Monomial {
    std::array<std::uint8_t, 8> exp{};
    bool operator==(const Monomial& o) const { return exp == o.exp; }
};

struct UnivPoly {
    unsigned nvars = 0;
    std::vector<std::pair<Monomial, BigInt>> terms;  // sorted by packed key
};

struct ModPoly {
    unsigned nvars = 0;
    std::vector<std::pair<Monomial, Coeff>> terms;  // coeff in [1, p)
};

class WittContext {
  public:
    Coeff p() const { return p_; }
    unsigned m() const { return m_; }  // vectors have m+1 components

    // Integer originals (for symbolic property checks).
    const std::vector<UnivPoly>& sum_polys_int() const { return sum_int_; }
    const std::vector<UnivPoly>& neg_polys_int() const { return neg_int_; }
    const std::vector<UnivPoly>& rescale_polys_int() const { return q_int_; }
    const std::vector<UnivPoly>& product_polys_int() const;  // built lazily

    // Mod-p reductions used for evaluation.
    const std::vector<ModPoly>& sum_polys() const { return sum_mod_; }
    const std::vector<ModPoly>& neg_polys() const { return neg_mod_; }
    const std::vector<ModPoly>& rescale_polys() const { return q_mod_; }
    const std::vector<ModPoly>& product_polys() const;

    // Shared, lazily built, thread-safe registry keyed by (p, m).
    static const WittContext& get(Coeff p, unsigned m);

  private:
    WittContext(Coeff p, unsigned m);
    void build();
    bool load_from_cache();
    void store_to_cache() const;
    bool validate_loaded() const;

    Coeff p_;
    unsigned m_;
    std::vector<UnivPoly> sum_int_, neg_int_, q_int_;
    std::vector<ModPoly> sum_mod_, neg_mod_, q_mod_;
    mutable std::vector<UnivPoly> mul_int_;  // lazy
    mutable std::vector<ModPoly> mul_mod_;
    friend class WittContextPool;
};

// --- generic evaluation ----------------------------------------------------
//
// Ring: a char-p ring presented by value-semantic elements.
// Required members: Elem, zero(), one(), from_int(long),
// add(a, b), mul(a, b), is_zero(a).

template <class Ring>
typename Ring::Elem eval_poly(const ModPoly& P, const Ring& R,
                              const std::vector<typename Ring::Elem>& vars) {
    using Elem = typename Ring::Elem;
    // lazily computed powers per variable, indexed by exponent
    std::vector<std::vector<Elem>> pows(vars.size());
    auto power = [&](std::size_t v, unsigned e) -> const Elem& {
        auto& tbl = pows[v];
        if (tbl.empty()) tbl.push_back(R.one());
        while (tbl.size() <= e) tbl.push_back(R.mul(tbl.back(), vars[v]));
        return tbl[e];
    };
    Elem acc = R.zero();
    for (const auto& [mono, coeff] : P.terms) {
        Elem t = R.from_int(static_cast<long>(coeff));
        bool dead = false;
        for (std::size_t v = 0; v < P.nvars && !dead; ++v) {
            const unsigned e = mono.exp[v];
            if (e == 0) continue;
            if (R.is_zero(vars[v])) {
                dead = true;
                break;
            }
            t = R.mul(t, power(v, e));
        }
        if (!dead) acc = R.add(acc, t);
    }
    return acc;
}

template <class Ring>
std::vector<typename Ring::Elem> eval_poly_list(
    const std::vector<ModPoly>& Ps, const Ring& R,
    const std::vector<typename Ring::Elem>& vars) {
    std::vector<typename Ring::Elem> out;
    out.reserve(Ps.size());
    for (const auto& P : Ps) out.push_back(eval_poly(P, R, vars));
    return out;
}

template <class Ring>
std::vector<typename Ring::Elem> witt_add_generic(
    const WittContext& ctx, const Ring& R,
    const std::vector<typename Ring::Elem>& a,
    const std::vector<typename Ring::Elem>& b) {
    std::vector<typename Ring::Elem> vars = a;
    vars.insert(vars.end(), b.begin(), b.end());
    return eval_poly_list(ctx.sum_polys(), R, vars);
}

template <class Ring>
std::vector<typename Ring::Elem> witt_neg_generic(
    const WittContext& ctx, const Ring& R,
    const std::vector<typename Ring::Elem>& a) {
    return eval_poly_list(ctx.neg_polys(), R, a);
}

template <class Ring>
std::vector<typename Ring::Elem> witt_mul_generic(
    const WittContext& ctx, const Ring& R,
    const std::vector<typename Ring::Elem>& a,
    const std::vector<typename Ring::Elem>& b) {
    std::vector<typename Ring::Elem> vars = a;
    vars.insert(vars.end(), b.begin(), b.end());
    return eval_poly_list(ctx.product_polys(), R, vars);
}

// Components of (x' - x) in the Witt group when x'_i = x_i(1 + y_i).
template <class Ring>
std::vector<typename Ring::Elem> rescale_difference_generic(
    const WittContext& ctx, const Ring& R,
    const std::vector<typename Ring::Elem>& x,
    const std::vector<typename Ring::Elem>& y) {
    std::vector<typename Ring::Elem> vars = x;
    vars.insert(vars.end(), y.begin(), y.end());
    return eval_poly_list(ctx.rescale_polys(), R, vars);
}

// --- Witt vectors over K ---------------------------------------------------

struct LaurentRing {
    const FieldConfig* F;
    using Elem = LaurentElem;
    Elem zero() const { return lau_zero(); }
    Elem one() const { return lau_from_res(*F, res_one(*F)); }
    Elem from_int(long n) const { return lau_from_res(*F, res_from_int(*F, n)); }
    Elem add(const Elem& a, const Elem& b) const { return lau_add(*F, a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return lau_mul(*F, a, b); }
    bool is_zero(const Elem& a) const { return lau_is_zero(a); }
};

using WittVec = std::vector<LaurentElem>;

WittVec witt_zero(unsigned m);
WittVec witt_add(const FieldConfig& F, const WittVec& a, const WittVec& b);
WittVec witt_neg(const FieldConfig& F, const WittVec& a);
WittVec witt_sub(const FieldConfig& F, const WittVec& a, const WittVec& b);
WittVec witt_mul(const FieldConfig& F, const WittVec& a, const WittVec& b);
WittVec witt_frobenius(const FieldConfig& F, const WittVec& a);
// (x_0..x_m) -> (0, x_0..x_m); result one component longer.
WittVec verschiebung(const WittVec& a);
// u-fold sum (u >= 0), by doubling.
WittVec witt_scalar(const FieldConfig& F, const WittVec& a, unsigned long u);
WittVec rescale_difference(const FieldConfig& F, const WittVec& x,
                           const WittVec& y);
// F(y) - y in the Witt group; the moves used by every reduction.
WittVec frobenius_minus_one(const FieldConfig& F, const WittVec& y);

// --- filtrations -----------------------------------------------------------

// -p^(m-i) * v(x_i) for nonzero components; the least n >= 0 with
// x in fil_n is the max of these and 0.
long witt_level(Coeff p, const WittVec& x);
bool fil_membership(Coeff p, const WittVec& x, long n);
// The modified filtration, by the componentwise bound: with
// mp = min(ord_p(n+1), m+1), components i >= m+1-mp may reach depth n+1.
bool fil_prime_membership(Coeff p, const WittVec& x, long n);
unsigned ord_p(Coeff p, unsigned long n);

}  // namespace swanlab
