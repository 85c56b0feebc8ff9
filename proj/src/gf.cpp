#include "swanlab/gf.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace swanlab {

namespace {

bool is_prime(Coeff n) {
    if (n < 2) return false;
    for (Coeff d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- dense GF(p)[x] helpers for modulus validation -------------------------

using PPoly = std::vector<Coeff>;  // over GF(p), lowest degree first

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(Coeff p, const PPoly& a, const PPoly& b) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

Coeff inv_mod_p(Coeff p, Coeff a) {
    // p is a small prime; brute force is fine and obviously exact.
    for (Coeff x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw DivisionByZeroError("inverse of 0 mod p");
}

PPoly pmod(Coeff p, PPoly a, const PPoly& m) {
    ptrim(a);
    const std::size_t dm = m.size() - 1;
    const Coeff lead_inv = inv_mod_p(p, m.back());
    while (a.size() > dm) {
        Coeff c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            Coeff sub = c * m[i] % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PPoly pgcd(Coeff p, PPoly a, PPoly b) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly r = pmod(p, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod f, computed by k successive p-th powers.
PPoly x_power_frobenius(Coeff p, unsigned k, const PPoly& f) {
    PPoly cur = {0, 1};  // x
    cur = pmod(p, cur, f);
    for (unsigned step = 0; step < k; ++step) {
        // cur^p mod f via square-and-multiply on the exponent p
        PPoly acc = {1};
        PPoly base = cur;
        Coeff e = p;
        while (e) {
            if (e & 1) acc = pmod(p, pmul(p, acc, base), f);
            base = pmod(p, pmul(p, base, base), f);
            e >>= 1;
        }
        cur = std::move(acc);
    }
    return cur;
}

struct ConwayEntry {
    Coeff p;
    unsigned e;
    std::vector<Coeff> coeffs;  // lowest degree first, monic
};

// Standard Conway polynomials, lowest degree first.
const std::array<ConwayEntry, 21> kConwayTable = {{
    {2, 1, {1, 1}},
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {3, 1, {1, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 0, 0, 2, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {3, 6, {2, 2, 1, 0, 2, 0, 1}},
    {5, 1, {3, 1}},
    {5, 2, {2, 4, 1}},
    {5, 3, {3, 3, 0, 1}},
    {5, 4, {2, 4, 4, 0, 1}},
    {7, 1, {4, 1}},
    {7, 2, {3, 6, 1}},
    {7, 3, {4, 0, 6, 1}},
}};

}  // namespace

ModulusPoly conway_polynomial(Coeff p, unsigned e) {
    for (const auto& entry : kConwayTable)
        if (entry.p == p && entry.e == e) return entry.coeffs;
    throw ConfigError("no tabulated modulus for GF(" + std::to_string(p) + "^" +
                      std::to_string(e) + "); supply one explicitly");
}

bool is_irreducible_mod_p(Coeff p, const ModulusPoly& f) {
    if (f.size() < 2 || f.back() != 1) return false;
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    // x^(p^n) == x mod f
    PPoly xq = x_power_frobenius(p, n, f);
    PPoly x = pmod(p, {0, 1}, f);
    {
        PPoly diff = xq;
        diff.resize(std::max(diff.size(), x.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            diff[i] = (diff[i] + p - x[i]) % p;
        ptrim(diff);
        if (!diff.empty()) return false;
    }
    // gcd(x^(p^(n/l)) - x, f) == 1 for every prime l | n
    for (unsigned l = 2; l <= n; ++l) {
        if (n % l != 0 || !is_prime(l)) continue;
        PPoly xsub = x_power_frobenius(p, n / l, f);
        PPoly diff = xsub;
        diff.resize(std::max(diff.size(), x.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            diff[i] = (diff[i] + p - x[i]) % p;
        ptrim(diff);
        PPoly g = pgcd(p, diff, f);
        if (g.size() != 1) return false;
    }
    return true;
}

GaloisField::GaloisField(Coeff p, unsigned e)
    : p_(p), e_(e), mod_(conway_polynomial(p, e)) {
    init();
}

GaloisField::GaloisField(Coeff p, ModulusPoly modulus)
    : p_(p), e_(modulus.empty() ? 0 : static_cast<unsigned>(modulus.size() - 1)),
      mod_(std::move(modulus)) {
    init();
}

void GaloisField::init() {
    if (!is_prime(p_)) throw ConfigError("p must be prime");
    if (e_ < 1) throw ConfigError("extension degree must be >= 1");
    if (e_ > 16) throw ConfigError("extension degree beyond supported envelope");
    for (Coeff& c : mod_) c %= p_;
    if (mod_.size() != e_ + 1 || mod_.back() != 1)
        throw ConfigError("modulus must be monic of degree e");
    if (!is_irreducible_mod_p(p_, mod_))
        throw ConfigError("modulus is reducible over GF(p)");
    q_ = 1;
    for (unsigned i = 0; i < e_; ++i) q_ *= p_;
}

GFElem GaloisField::zero() const { return GFElem{std::vector<Coeff>(e_, 0)}; }

GFElem GaloisField::one() const {
    GFElem r = zero();
    r.c[0] = 1 % p_;
    return r;
}

GFElem GaloisField::gen() const {
    GFElem r = zero();
    if (e_ > 1) {
        r.c[1] = 1;
    } else {
        // in the prime field, t is congruent to -mod_[0]
        r.c[0] = (p_ - mod_[0] % p_) % p_;
    }
    return r;
}

GFElem GaloisField::from_int(long long n) const {
    long long m = n % static_cast<long long>(p_);
    if (m < 0) m += p_;
    GFElem r = zero();
    r.c[0] = static_cast<Coeff>(m);
    return r;
}

bool GaloisField::is_zero(const GFElem& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [](Coeff x) { return x == 0; });
}

GFElem GaloisField::add(const GFElem& a, const GFElem& b) const {
    GFElem r = zero();
    for (unsigned i = 0; i < e_; ++i) r.c[i] = (a.c[i] + b.c[i]) % p_;
    return r;
}

GFElem GaloisField::sub(const GFElem& a, const GFElem& b) const {
    GFElem r = zero();
    for (unsigned i = 0; i < e_; ++i) r.c[i] = (a.c[i] + p_ - b.c[i]) % p_;
    return r;
}

GFElem GaloisField::neg(const GFElem& a) const { return sub(zero(), a); }

GFElem GaloisField::mul(const GFElem& a, const GFElem& b) const {
    std::vector<Coeff> prod(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i) {
        if (a.c[i] == 0) continue;
        for (unsigned j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % p_;
    }
    // reduce mod the monic modulus
    for (std::size_t d = prod.size(); d-- > e_;) {
        Coeff c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < e_; ++i)
            prod[d - e_ + i] = (prod[d - e_ + i] + (p_ - mod_[i] % p_) * c) % p_;
    }
    GFElem r = zero();
    for (unsigned i = 0; i < e_; ++i) r.c[i] = prod[i];
    return r;
}

GFElem GaloisField::pow(const GFElem& a, unsigned long long k) const {
    GFElem acc = one();
    GFElem base = a;
    while (k) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

GFElem GaloisField::inv(const GFElem& a) const {
    if (is_zero(a)) throw DivisionByZeroError("inverse of 0 in GF(q)");
    // a^(q-2); q is small under the envelope
    return pow(a, q_ - 2);
}

GFElem GaloisField::frobenius(const GFElem& a) const { return pow(a, p_); }

GFElem GaloisField::frobenius_inv(const GFElem& a) const {
    // x -> x^p is a bijection with inverse x -> x^(p^(e-1))
    GFElem r = a;
    for (unsigned i = 0; i + 1 < e_; ++i) r = frobenius(r);
    return r;
}

GFElem GaloisField::iterated_root(const GFElem& a, unsigned r) const {
    GFElem x = a;
    for (unsigned i = 0; i < r; ++i) x = frobenius_inv(x);
    return x;
}

}  // namespace swanlab
