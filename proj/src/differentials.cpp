#include "swanlab/differentials.hpp"

#include <utility>

#include "swanlab/errors.hpp"

namespace swanlab {

ResidueForm rform_zero(const FieldConfig& F) { return ResidueForm{res_zero(F)}; }

bool rform_is_zero(const ResidueForm& w) { return res_is_zero(w.a); }

ResidueForm rform_add(const FieldConfig& F, const ResidueForm& a,
                      const ResidueForm& b) {
    return ResidueForm{res_add(F, a.a, b.a)};
}

ResidueForm rform_neg(const FieldConfig& F, const ResidueForm& a) {
    return ResidueForm{res_neg(F, a.a)};
}

ResidueForm rform_scale(const FieldConfig& F, const ResidueElem& c,
                        const ResidueForm& a) {
    return ResidueForm{res_mul(F, c, a.a)};
}

ResidueForm d_residue(const FieldConfig& F, const ResidueElem& a) {
    return ResidueForm{res_derivative(F, a)};
}

ResidueForm cartier(const FieldConfig& F, const ResidueForm& w) {
    if (res_is_zero(w.a)) return w;
    auto parts = p_basis_decompose(F, w.a);
    return ResidueForm{parts[F.p() - 1]};
}

ResidueForm cartier_inverse(const FieldConfig& F, const ResidueForm& w) {
    ResidueElem a = res_pow(F, w.a, F.p());
    a = res_mul(F, a, res_pow(F, res_y(F), static_cast<long>(F.p()) - 1));
    return ResidueForm{a};
}

static ResidueForm cartier_pow(const FieldConfig& F, ResidueForm w, unsigned j) {
    for (unsigned i = 0; i < j; ++i) w = cartier(F, w);
    return w;
}

bool in_boundary_filtration(const FieldConfig& F, const ResidueForm& w,
                            unsigned r) {
    return rform_is_zero(cartier_pow(F, w, r));
}

std::optional<ResidueElem> iterated_power_witness(const FieldConfig& F,
                                                  const ResidueElem& beta,
                                                  unsigned r) {
    return res_iterated_root(F, beta, r);
}

LocalForm kform_zero() { return LocalForm{lau_zero(), lau_zero()}; }

bool kform_is_zero(const LocalForm& w) {
    return lau_is_zero(w.f) && lau_is_zero(w.b);
}

LocalForm kform_add(const FieldConfig& F, const LocalForm& a,
                    const LocalForm& b) {
    return LocalForm{lau_add(F, a.f, b.f), lau_add(F, a.b, b.b)};
}

LocalForm kform_neg(const FieldConfig& F, const LocalForm& a) {
    return LocalForm{lau_neg(F, a.f), lau_neg(F, a.b)};
}

LocalForm kform_scale(const FieldConfig& F, const LaurentElem& c,
                      const LocalForm& a) {
    return LocalForm{lau_mul(F, c, a.f), lau_mul(F, c, a.b)};
}

LocalForm d_local(const FieldConfig& F, const LaurentElem& x) {
    LocalForm out = kform_zero();
    for (const auto& t : x.terms) {
        ResidueElem da = res_derivative(F, t.coeff);
        if (!res_is_zero(da)) out.f = lau_add(F, out.f, lau_term(F, da, t.exp));
        long jm = t.exp % static_cast<long>(F.p());
        if (jm != 0) {
            ResidueElem ja = res_mul(F, res_from_int(F, jm), t.coeff);
            if (!res_is_zero(ja))
                out.b = lau_add(F, out.b, lau_term(F, ja, t.exp));
        }
    }
    return out;
}

LaurentElem dpi_coefficient(const FieldConfig& F, const LocalForm& w) {
    return lau_mul(F, w.b, lau_term(F, res_one(F), -1));
}

LocalForm witt_differential(const FieldConfig& F, const WittVec& x) {
    const auto m = x.size() - 1;
    LocalForm out = kform_zero();
    long w = 1;
    std::vector<long> weight(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        weight[x.size() - 1 - k] = w;
        w *= static_cast<long>(F.p());
    }
    for (std::size_t i = 0; i <= m; ++i) {
        if (lau_is_zero(x[i])) continue;
        LocalForm dxi = d_local(F, x[i]);
        LaurentElem c = lau_pow(F, x[i], weight[i] - 1);
        out = kform_add(F, out, kform_scale(F, c, dxi));
    }
    return out;
}

bool form_in_filtration(const LocalForm& w, long n, Basis basis) {
    if (n < 0) return kform_is_zero(w);
    if (basis == Basis::Log)
        return val_ge(lau_valuation(w.f), -n) && val_ge(lau_valuation(w.b), -n);
    return val_ge(lau_valuation(w.f), -(n + 1)) &&
           val_ge(lau_valuation(w.b), -n);
}

GradedForm graded_class(const FieldConfig& F, const LocalForm& w, long n,
                        Basis basis) {
    if (!form_in_filtration(w, n, basis))
        throw NotInFiltrationError("form lies outside fil_" + std::to_string(n));
    if (basis == Basis::Log)
        return GradedForm{basis, n, lau_coeff(F, w.f, -n), lau_coeff(F, w.b, -n)};
    return GradedForm{basis, n, lau_coeff(F, w.f, -(n + 1)),
                      lau_coeff(F, w.b, -n)};
}

bool graded_is_zero(const GradedForm& g) {
    return res_is_zero(g.alpha) && res_is_zero(g.beta);
}

GradedForm graded_neg(const FieldConfig& F, const GradedForm& g) {
    return GradedForm{g.basis, g.n, res_neg(F, g.alpha), res_neg(F, g.beta)};
}

ResidueElem residue_map(const GradedForm& g) { return g.beta; }

ResidueForm boundary_layer(const FieldConfig& F, unsigned j,
                           const std::vector<ResidueElem>& coeffs) {
    ResidueElem a = res_zero(F);
    long pj = 1;
    for (unsigned t = 0; t < j; ++t) pj *= static_cast<long>(F.p());
    for (std::size_t k = 1; k < coeffs.size() + 1; ++k) {
        if (res_is_zero(coeffs[k - 1])) continue;
        ResidueElem term =
            res_pow(F, coeffs[k - 1], pj * static_cast<long>(F.p()));
        term = res_mul(F, term,
                       res_pow(F, res_y(F), static_cast<long>(k) * pj - 1));
        term = res_mul(F, term, res_from_int(F, static_cast<long>(k)));
        a = res_add(F, a, term);
    }
    return ResidueForm{a};
}

// Reads off the layer coefficients of a form sum_k k x_k^p y^(k-1) dy.
// Throws NotInImageError when the form does not have that shape.
static std::vector<ResidueElem> extract_base_layer(const FieldConfig& F,
                                                   const ResidueForm& w) {
    const Coeff p = F.p();
    auto parts = p_basis_decompose(F, w.a);
    if (!res_is_zero(parts[p - 1]))
        throw NotInImageError("class has a y^(p-1) dy obstruction");
    std::vector<ResidueElem> out;
    out.reserve(p - 1);
    for (Coeff k = 1; k < p; ++k) {
        ResidueElem inv = res_inv(F, res_from_int(F, static_cast<long>(k)));
        out.push_back(res_mul(F, parts[k - 1], inv));
    }
    return out;
}

// Peels r layers off a B_r element, top down. The remainder must vanish.
static std::vector<std::vector<ResidueElem>> peel_layers(const FieldConfig& F,
                                                         ResidueForm w,
                                                         unsigned r) {
    std::vector<std::vector<ResidueElem>> layers(r);
    if (!F.has_y()) {
        if (!rform_is_zero(w))
            throw NotInImageError("nonzero dy part over a perfect residue field");
        return layers;
    }
    for (unsigned j = r; j-- > 0;) {
        layers[j] = extract_base_layer(F, cartier_pow(F, w, j));
        w = rform_add(F, w, rform_neg(F, boundary_layer(F, j, layers[j])));
    }
    if (!rform_is_zero(w))
        throw NotInImageError("dy part is not an iterated boundary");
    return layers;
}

GradedNormalForm graded_normal_form(const FieldConfig& F, const GradedForm& g) {
    if (g.n < 1) throw NotInImageError("normal forms exist at positive levels only");
    const Coeff p = F.p();
    GradedNormalForm nf;
    nf.basis = g.basis;
    nf.n = g.n;
    if (g.basis == Basis::Log) {
        nf.r = static_cast<unsigned>(ord_p(p, g.n));
        long pr = 1;
        for (unsigned t = 0; t < nf.r; ++t) pr *= static_cast<long>(p);
        nf.n0 = g.n / pr;
        nf.rp = 0;
        ResidueElem n0 = res_from_int(F, nf.n0);
        ResidueElem target = res_neg(F, res_div(F, g.beta, n0));
        auto x = iterated_power_witness(F, target, nf.r);
        if (!x)
            throw NotInImageError("dlog pi coefficient is not a p^r-th power");
        nf.x = *x;
        ResidueForm ca = cartier_pow(F, ResidueForm{g.alpha}, nf.r);
        if (!(ca == d_residue(F, nf.x)))
            throw NotInImageError("dy part fails the compatibility relation");
        ResidueElem xpart =
            res_mul(F, res_pow(F, nf.x, pr - 1), res_derivative(F, nf.x));
        ResidueForm w{res_sub(F, g.alpha, xpart)};
        nf.layers = peel_layers(F, w, nf.r);
        return nf;
    }
    nf.r = static_cast<unsigned>(ord_p(p, g.n + 1));
    nf.rp = static_cast<unsigned>(ord_p(p, g.n));
    nf.n0 = 0;
    auto x = iterated_power_witness(F, g.beta, nf.rp);
    if (!x) throw NotInImageError("dpi coefficient is not a p^r-th power");
    nf.x = *x;
    nf.layers = peel_layers(F, ResidueForm{g.alpha}, nf.r);
    return nf;
}

GradedForm reassemble_normal_form(const FieldConfig& F,
                                  const GradedNormalForm& nf) {
    const Coeff p = F.p();
    ResidueForm a = rform_zero(F);
    for (unsigned j = 0; j < nf.layers.size(); ++j)
        a = rform_add(F, a, boundary_layer(F, j, nf.layers[j]));
    if (nf.basis == Basis::Log) {
        long pr = 1;
        for (unsigned t = 0; t < nf.r; ++t) pr *= static_cast<long>(p);
        ResidueElem xpart =
            res_mul(F, res_pow(F, nf.x, pr - 1), res_derivative(F, nf.x));
        ResidueElem alpha = res_add(F, a.a, xpart);
        ResidueElem beta = res_mul(F, res_from_int(F, -nf.n0),
                                   res_pow(F, nf.x, pr));
        return GradedForm{Basis::Log, nf.n, alpha, beta};
    }
    long prp = 1;
    for (unsigned t = 0; t < nf.rp; ++t) prp *= static_cast<long>(p);
    return GradedForm{Basis::Plain, nf.n, a.a, res_pow(F, nf.x, prp)};
}

bool normal_form_is_zero(const GradedNormalForm& nf) {
    if (!res_is_zero(nf.x)) return false;
    for (const auto& row : nf.layers)
        for (const auto& c : row)
            if (!res_is_zero(c)) return false;
    return true;
}

}  // namespace swanlab
