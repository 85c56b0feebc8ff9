#include "swanlab/residue.hpp"

#include <utility>

namespace swanlab {

Poly poly_zero() { return Poly{}; }

Poly poly_const(const FieldConfig& F, const GFElem& a) {
    if (F.gf.is_zero(a)) return Poly{};
    return Poly{{a}};
}

Poly poly_y(const FieldConfig& F) {
    return Poly{{F.gf.zero(), F.gf.one()}};
}

void poly_trim(const FieldConfig& F, Poly& a) {
    while (!a.c.empty() && F.gf.is_zero(a.c.back())) a.c.pop_back();
}

bool poly_is_zero(const Poly& a) { return a.c.empty(); }

int poly_deg(const Poly& a) { return static_cast<int>(a.c.size()) - 1; }

Poly poly_add(const FieldConfig& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F.gf.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        GFElem s = F.gf.zero();
        if (i < a.c.size()) s = F.gf.add(s, a.c[i]);
        if (i < b.c.size()) s = F.gf.add(s, b.c[i]);
        r.c[i] = s;
    }
    poly_trim(F, r);
    return r;
}

Poly poly_neg(const FieldConfig& F, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = F.gf.neg(x);
    return r;
}

Poly poly_sub(const FieldConfig& F, const Poly& a, const Poly& b) {
    return poly_add(F, a, poly_neg(F, b));
}

Poly poly_mul(const FieldConfig& F, const Poly& a, const Poly& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return Poly{};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, F.gf.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (F.gf.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.gf.add(r.c[i + j], F.gf.mul(a.c[i], b.c[j]));
    }
    poly_trim(F, r);
    return r;
}

Poly poly_pow(const FieldConfig& F, const Poly& a, unsigned long long k) {
    Poly acc = poly_const(F, F.gf.one());
    Poly base = a;
    while (k) {
        if (k & 1) acc = poly_mul(F, acc, base);
        base = poly_mul(F, base, base);
        k >>= 1;
    }
    return acc;
}

void poly_divmod(const FieldConfig& F, const Poly& a, const Poly& b, Poly& q,
                 Poly& r) {
    if (poly_is_zero(b)) throw DivisionByZeroError("polynomial division by 0");
    q = Poly{};
    r = a;
    poly_trim(F, r);
    const int db = poly_deg(b);
    const GFElem lead_inv = F.gf.inv(b.c.back());
    if (poly_deg(r) >= db)
        q.c.assign(static_cast<std::size_t>(poly_deg(r) - db) + 1, F.gf.zero());
    while (poly_deg(r) >= db) {
        const int shift = poly_deg(r) - db;
        const GFElem c = F.gf.mul(r.c.back(), lead_inv);
        q.c[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= db; ++i) {
            auto idx = static_cast<std::size_t>(shift + i);
            r.c[idx] = F.gf.sub(r.c[idx], F.gf.mul(c, b.c[static_cast<std::size_t>(i)]));
        }
        poly_trim(F, r);
    }
    poly_trim(F, q);
}

Poly poly_gcd(const FieldConfig& F, Poly a, Poly b) {
    poly_trim(F, a);
    poly_trim(F, b);
    while (!poly_is_zero(b)) {
        Poly q, r;
        poly_divmod(F, a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!poly_is_zero(a)) {
        const GFElem inv = F.gf.inv(a.c.back());
        for (auto& x : a.c) x = F.gf.mul(x, inv);
    }
    return a;
}

Poly poly_derivative(const FieldConfig& F, const Poly& a) {
    Poly r;
    if (a.c.size() < 2) return r;
    r.c.assign(a.c.size() - 1, F.gf.zero());
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = F.gf.mul(F.gf.from_int(static_cast<long long>(i)), a.c[i]);
    poly_trim(F, r);
    return r;
}

std::optional<Poly> poly_pth_root(const FieldConfig& F, const Poly& a) {
    const Coeff p = F.p();
    Poly r;
    if (poly_is_zero(a)) return r;
    r.c.assign(a.c.size() / p + 1, F.gf.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (F.gf.is_zero(a.c[i])) continue;
        if (i % p != 0) return std::nullopt;
        r.c[i / p] = F.gf.frobenius_inv(a.c[i]);
    }
    poly_trim(F, r);
    return r;
}

// --- rational functions ----------------------------------------------------

namespace {

ResidueElem make_reduced(const FieldConfig& F, Poly num, Poly den) {
    if (poly_is_zero(den)) throw DivisionByZeroError("zero denominator");
    if (poly_is_zero(num)) return ResidueElem{Poly{}, poly_const(F, F.gf.one())};
    Poly g = poly_gcd(F, num, den);
    if (poly_deg(g) > 0 || !poly_is_zero(g)) {
        Poly q, r;
        poly_divmod(F, num, g, q, r);
        num = std::move(q);
        poly_divmod(F, den, g, q, r);
        den = std::move(q);
    }
    const GFElem inv = F.gf.inv(den.c.back());
    for (auto& x : den.c) x = F.gf.mul(x, inv);
    for (auto& x : num.c) x = F.gf.mul(x, inv);
    return ResidueElem{std::move(num), std::move(den)};
}

void check_kind(const FieldConfig& F, const ResidueElem& a) {
    if (!F.has_y() && (poly_deg(a.num) > 0 || poly_deg(a.den) > 0))
        throw ConfigError("non-constant element over a perfect residue field");
}

}  // namespace

ResidueElem res_zero(const FieldConfig& F) {
    return ResidueElem{Poly{}, poly_const(F, F.gf.one())};
}

ResidueElem res_one(const FieldConfig& F) {
    return ResidueElem{poly_const(F, F.gf.one()), poly_const(F, F.gf.one())};
}

ResidueElem res_from_gf(const FieldConfig& F, const GFElem& a) {
    return ResidueElem{poly_const(F, a), poly_const(F, F.gf.one())};
}

ResidueElem res_from_int(const FieldConfig& F, long long n) {
    return res_from_gf(F, F.gf.from_int(n));
}

ResidueElem res_y(const FieldConfig& F) {
    if (!F.has_y()) throw ConfigError("'y' is not an element of GF(q)");
    return ResidueElem{poly_y(F), poly_const(F, F.gf.one())};
}

ResidueElem res_make(const FieldConfig& F, Poly num, Poly den) {
    poly_trim(F, num);
    poly_trim(F, den);
    ResidueElem r = make_reduced(F, std::move(num), std::move(den));
    check_kind(F, r);
    return r;
}

bool res_is_zero(const ResidueElem& a) { return poly_is_zero(a.num); }

bool res_is_constant(const ResidueElem& a) {
    return poly_deg(a.num) <= 0 && poly_deg(a.den) == 0;
}

ResidueElem res_add(const FieldConfig& F, const ResidueElem& a,
                    const ResidueElem& b) {
    Poly num = poly_add(F, poly_mul(F, a.num, b.den), poly_mul(F, b.num, a.den));
    Poly den = poly_mul(F, a.den, b.den);
    return make_reduced(F, std::move(num), std::move(den));
}

ResidueElem res_neg(const FieldConfig& F, const ResidueElem& a) {
    return ResidueElem{poly_neg(F, a.num), a.den};
}

ResidueElem res_sub(const FieldConfig& F, const ResidueElem& a,
                    const ResidueElem& b) {
    return res_add(F, a, res_neg(F, b));
}

ResidueElem res_mul(const FieldConfig& F, const ResidueElem& a,
                    const ResidueElem& b) {
    Poly num = poly_mul(F, a.num, b.num);
    Poly den = poly_mul(F, a.den, b.den);
    return make_reduced(F, std::move(num), std::move(den));
}

ResidueElem res_inv(const FieldConfig& F, const ResidueElem& a) {
    if (res_is_zero(a)) throw DivisionByZeroError("inverse of 0 in F");
    return make_reduced(F, a.den, a.num);
}

ResidueElem res_div(const FieldConfig& F, const ResidueElem& a,
                    const ResidueElem& b) {
    return res_mul(F, a, res_inv(F, b));
}

ResidueElem res_pow(const FieldConfig& F, const ResidueElem& a, long long k) {
    if (k < 0) return res_pow(F, res_inv(F, a), -k);
    ResidueElem acc = res_one(F);
    ResidueElem base = a;
    auto e = static_cast<unsigned long long>(k);
    while (e) {
        if (e & 1) acc = res_mul(F, acc, base);
        base = res_mul(F, base, base);
        e >>= 1;
    }
    return acc;
}

ResidueElem res_frobenius(const FieldConfig& F, const ResidueElem& a) {
    return res_pow(F, a, F.p());
}

ResidueElem res_derivative(const FieldConfig& F, const ResidueElem& a) {
    if (!F.has_y()) return res_zero(F);
    // (n/d)' = (n'd - nd')/d^2
    Poly nd = poly_sub(F, poly_mul(F, poly_derivative(F, a.num), a.den),
                       poly_mul(F, a.num, poly_derivative(F, a.den)));
    return make_reduced(F, std::move(nd), poly_mul(F, a.den, a.den));
}

std::vector<ResidueElem> p_basis_decompose(const FieldConfig& F,
                                           const ResidueElem& f) {
    const Coeff p = F.p();
    std::vector<ResidueElem> out(p, res_zero(F));
    if (res_is_zero(f)) return out;
    if (!F.has_y()) {
        // den == 1 by the reduced invariant, so f is its numerator constant
        out[0] = res_from_gf(F, F.gf.frobenius_inv(f.num.c[0]));
        return out;
    }
    // f = N/D = N*D^(p-1) / D^p; split P = N*D^(p-1) by exponent residue.
    Poly P = poly_mul(F, f.num, poly_pow(F, f.den, p - 1));
    std::vector<Poly> buckets(p);
    for (std::size_t i = 0; i < P.c.size(); ++i) {
        if (F.gf.is_zero(P.c[i])) continue;
        const std::size_t j = i % p;
        const std::size_t a = i / p;
        if (buckets[j].c.size() <= a * p)
            buckets[j].c.resize(a * p + 1, F.gf.zero());
        buckets[j].c[a * p] = P.c[i];
    }
    for (Coeff j = 0; j < p; ++j) {
        poly_trim(F, buckets[j]);
        auto root = poly_pth_root(F, buckets[j]);
        // every exponent in the bucket is a multiple of p by construction
        out[j] = make_reduced(F, std::move(*root), f.den);
    }
    return out;
}

bool res_is_pth_power(const FieldConfig& F, const ResidueElem& f) {
    if (res_is_zero(f)) return true;
    if (!F.has_y()) return true;  // GF(q) is perfect
    auto parts = p_basis_decompose(F, f);
    for (Coeff j = 1; j < F.p(); ++j)
        if (!res_is_zero(parts[j])) return false;
    return true;
}

ResidueElem res_pth_root(const FieldConfig& F, const ResidueElem& f) {
    if (res_is_zero(f)) return res_zero(F);
    auto parts = p_basis_decompose(F, f);
    for (Coeff j = 1; j < F.p(); ++j)
        if (!res_is_zero(parts[j]))
            throw NotAPthPowerError("element is not a p-th power in F");
    return parts[0];
}

std::optional<ResidueElem> res_iterated_root(const FieldConfig& F,
                                             const ResidueElem& f, unsigned r) {
    ResidueElem x = f;
    for (unsigned i = 0; i < r; ++i) {
        if (!res_is_pth_power(F, x)) return std::nullopt;
        x = res_pth_root(F, x);
    }
    return x;
}

}  // namespace swanlab
