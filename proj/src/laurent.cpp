#include "swanlab/laurent.hpp"

#include <algorithm>

namespace swanlab {

LaurentElem lau_zero() { return LaurentElem{}; }

LaurentElem lau_term(const FieldConfig& F, const ResidueElem& c, long exp) {
    LaurentElem r;
    if (!res_is_zero(c)) r.terms.push_back({exp, c});
    (void)F;
    return r;
}

LaurentElem lau_from_res(const FieldConfig& F, const ResidueElem& c) {
    return lau_term(F, c, 0);
}

bool lau_is_zero(const LaurentElem& a) { return a.terms.empty(); }

Valuation lau_valuation(const LaurentElem& a) {
    if (a.terms.empty()) return val_infinity();
    return val_of(a.terms.front().exp);
}

ResidueElem lau_coeff(const FieldConfig& F, const LaurentElem& a, long exp) {
    for (const auto& t : a.terms) {
        if (t.exp == exp) return t.coeff;
        if (t.exp > exp) break;
    }
    return res_zero(F);
}

const ResidueElem& lau_leading(const LaurentElem& a) {
    return a.terms.front().coeff;
}

LaurentElem lau_add(const FieldConfig& F, const LaurentElem& a,
                    const LaurentElem& b) {
    LaurentElem r;
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() ||
            (i < a.terms.size() && a.terms[i].exp < b.terms[j].exp)) {
            r.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].exp < a.terms[i].exp) {
            r.terms.push_back(b.terms[j++]);
        } else {
            ResidueElem s = res_add(F, a.terms[i].coeff, b.terms[j].coeff);
            if (!res_is_zero(s)) r.terms.push_back({a.terms[i].exp, std::move(s)});
            ++i;
            ++j;
        }
    }
    return r;
}

LaurentElem lau_neg(const FieldConfig& F, const LaurentElem& a) {
    LaurentElem r = a;
    for (auto& t : r.terms) t.coeff = res_neg(F, t.coeff);
    return r;
}

LaurentElem lau_sub(const FieldConfig& F, const LaurentElem& a,
                    const LaurentElem& b) {
    return lau_add(F, a, lau_neg(F, b));
}

LaurentElem lau_mul(const FieldConfig& F, const LaurentElem& a,
                    const LaurentElem& b) {
    if (a.terms.empty() || b.terms.empty()) return {};
    // accumulate into a sorted map keyed by exponent
    std::vector<LaurentTerm> acc;
    for (const auto& ta : a.terms) {
        for (const auto& tb : b.terms) {
            long e = ta.exp + tb.exp;
            ResidueElem c = res_mul(F, ta.coeff, tb.coeff);
            if (res_is_zero(c)) continue;
            auto it = std::lower_bound(
                acc.begin(), acc.end(), e,
                [](const LaurentTerm& t, long x) { return t.exp < x; });
            if (it != acc.end() && it->exp == e) {
                it->coeff = res_add(F, it->coeff, c);
            } else {
                acc.insert(it, LaurentTerm{e, std::move(c)});
            }
        }
    }
    LaurentElem r;
    for (auto& t : acc)
        if (!res_is_zero(t.coeff)) r.terms.push_back(std::move(t));
    return r;
}

LaurentElem lau_scale(const FieldConfig& F, const ResidueElem& c,
                      const LaurentElem& a) {
    if (res_is_zero(c)) return {};
    LaurentElem r;
    for (const auto& t : a.terms) {
        ResidueElem m = res_mul(F, c, t.coeff);
        if (!res_is_zero(m)) r.terms.push_back({t.exp, std::move(m)});
    }
    return r;
}

LaurentElem lau_pow(const FieldConfig& F, const LaurentElem& a,
                    unsigned long long k) {
    LaurentElem acc = lau_from_res(F, res_one(F));
    LaurentElem base = a;
    while (k) {
        if (k & 1) acc = lau_mul(F, acc, base);
        base = lau_mul(F, base, base);
        k >>= 1;
    }
    return acc;
}

LaurentElem lau_frobenius(const FieldConfig& F, const LaurentElem& a) {
    LaurentElem r;
    const long p = static_cast<long>(F.p());
    for (const auto& t : a.terms)
        r.terms.push_back({t.exp * p, res_frobenius(F, t.coeff)});
    return r;
}

bool lau_is_unit_monomial(const LaurentElem& a) { return a.terms.size() == 1; }

LaurentElem lau_inv(const FieldConfig& F, const LaurentElem& a) {
    if (lau_is_zero(a)) throw DivisionByZeroError("inverse of 0 in K");
    if (!lau_is_unit_monomial(a))
        throw DivisionByZeroError(
            "only single-term elements of K are invertible here");
    return lau_term(F, res_inv(F, a.terms[0].coeff), -a.terms[0].exp);
}

LaurentElem lau_truncate_above(const LaurentElem& a, long cut) {
    LaurentElem r;
    for (const auto& t : a.terms)
        if (t.exp < cut) r.terms.push_back(t);
    return r;
}

}  // namespace swanlab
