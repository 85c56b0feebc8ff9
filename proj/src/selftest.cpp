#include "swanlab/selftest.hpp"

#include <random>

#include "swanlab/errors.hpp"
#include "swanlab/oracle.hpp"
#include "swanlab/parser.hpp"
#include "swanlab/ramification.hpp"
#include "swanlab/render.hpp"

namespace swanlab {

namespace {

struct Checker {
    SuiteResult r;
    explicit Checker(std::string name) { r.name = std::move(name); }
    void check(bool ok, const std::string& what) {
        ++r.checks;
        if (!ok) {
            if (r.passed) r.detail = what;
            r.passed = false;
        }
    }
};

FieldConfig make_field(Coeff p, unsigned e, bool rational) {
    return FieldConfig(GaloisField(p, e),
                       rational ? ResidueKind::RationalFunction
                                : ResidueKind::Perfect);
}

long pow_long(long b, unsigned e) {
    long r = 1;
    while (e--) r *= b;
    return r;
}

ResidueElem random_res(const FieldConfig& F, std::mt19937_64& rng,
                       bool allow_zero) {
    for (;;) {
        Poly num;
        const int deg = F.has_y() ? static_cast<int>(rng() % 2) : 0;
        for (int i = 0; i <= deg; ++i) {
            GFElem c = F.gf.zero();
            for (unsigned d = 0; d < F.gf.e(); ++d)
                c.c[d] = static_cast<Coeff>(rng() % F.p());
            num.c.push_back(c);
        }
        poly_trim(F, num);
        Poly den = poly_const(F, F.gf.one());
        if (F.has_y() && rng() % 8 == 0)
            den = poly_add(F, poly_y(F),
                           poly_const(F, F.gf.from_int(1)));
        ResidueElem v = res_make(F, std::move(num), std::move(den));
        if (allow_zero || !res_is_zero(v)) return v;
    }
}

LaurentElem random_lau(const FieldConfig& F, std::mt19937_64& rng,
                       long min_exp, long max_exp) {
    LaurentElem out = lau_zero();
    const unsigned terms = 1 + rng() % 2;
    const unsigned long span =
        static_cast<unsigned long>(max_exp - min_exp + 1);
    for (unsigned t = 0; t < terms; ++t) {
        long e = min_exp + static_cast<long>(rng() % span);
        out = lau_add(F, out, lau_term(F, random_res(F, rng, true), e));
    }
    return out;
}

WittVec random_fil_member(const FieldConfig& F, std::mt19937_64& rng,
                          unsigned m, long n) {
    WittVec x = witt_zero(m);
    for (unsigned i = 0; i <= m; ++i) {
        const long w = pow_long(static_cast<long>(F.p()), m - i);
        x[i] = random_lau(F, rng, -(n / w), 1);
    }
    return x;
}

// --- curated instances -----------------------------------------------------

struct Curated {
    const char* name;
    Coeff p;
    unsigned e;
    bool rational;
    std::vector<const char*> comps;
    long sw;
    long sw_mod;
    const char* rsw_a;  // null iff sw == 0
    const char* rsw_b;
    const char* rswm_a;  // null iff rsw' absent
    const char* rswm_b;
    bool rswm_unsupported;
};

const std::vector<Curated>& curated_suite() {
    static const std::vector<Curated> suite = {
        {"gf3-pi2", 3, 1, false, {"pi^-2"}, 2, 2, "0", "2", "0", "2", false},
        {"gf2-pi3", 2, 1, false, {"pi^-3"}, 3, 3, "0", "1", "0", "1", false},
        {"gf2-pi2", 2, 1, false, {"pi^-2"}, 1, 1, "0", "1", nullptr, nullptr,
         true},
        {"gf2-trivial", 2, 1, false, {"pi^-4+pi^-1"}, 0, 0, nullptr, nullptr,
         nullptr, nullptr, false},
        {"gf2y-ypi2", 2, 1, true, {"y*pi^-2"}, 2, 1, "1", "0", nullptr,
         nullptr, true},
        {"gf3y-ypi3", 3, 1, true, {"y*pi^-3"}, 3, 2, "2", "0", "2", "0",
         false},
        {"gf3-pi3", 3, 1, false, {"pi^-3"}, 1, 1, "0", "1", "0", "1", false},
        {"gf3-2pi4", 3, 1, false, {"2*pi^-4"}, 4, 4, "0", "2", "0", "2",
         false},
        {"gf2-w2-pi1", 2, 1, false, {"pi^-1", "0"}, 2, 2, "0", "1", "0", "1",
         false},
        {"gf2y-w2-ypi1", 2, 1, true, {"y*pi^-1", "0"}, 2, 2, "y", "y^2", "0",
         "y^2", false},
        {"gf2y-y3pi2", 2, 1, true, {"y^3*pi^-2"}, 2, 1, "y^2", "0", nullptr,
         nullptr, true},
        {"gf3y-ypi2", 3, 1, true, {"y*pi^-2"}, 2, 2, "2", "2*y", "0", "2*y",
         false},
        {"gf3y-y2pi3", 3, 1, true, {"y^2*pi^-3"}, 3, 2, "y", "0", "y", "0",
         false},
        {"gf4-gpi2", 2, 2, false, {"g*pi^-2"}, 1, 1, "0", "g+1", nullptr,
         nullptr, true},
        {"gf9-gpi1", 3, 2, false, {"g*pi^-1"}, 1, 1, "0", "g", "0", "g",
         false},
        {"gf5-pi2", 5, 1, false, {"pi^-2"}, 2, 2, "0", "2", "0", "2", false},
        {"gf5-3pi5", 5, 1, false, {"3*pi^-5"}, 1, 1, "0", "3", "0", "3",
         false},
        {"gf2y-w2-v-ypi1", 2, 1, true, {"0", "y*pi^-1"}, 1, 1, "1", "y",
         nullptr, nullptr, true},
        {"gf3y-w2-v-ypi1", 3, 1, true, {"0", "y*pi^-1"}, 1, 1, "2", "y", "0",
         "y", false},
        {"gf2-w2-pi3", 2, 1, false, {"pi^-3", "0"}, 6, 6, "0", "1", "0", "1",
         false},
        {"gf2-w2-mixed", 2, 1, false, {"pi^-1", "pi^-1"}, 2, 2, "0", "1", "0",
         "1", false},
        {"gf2y-w2-deep", 2, 1, true, {"y*pi^-2", "y*pi^-1"}, 4, 3, "y", "0",
         "y", "0", false},
        {"gf2-w3-pi1", 2, 1, false, {"pi^-1", "0", "0"}, 4, 4, "0", "1", "0",
         "1", false},
        {"gf3-w2-pi1", 3, 1, false, {"pi^-1", "0"}, 3, 3, "0", "1", "0", "1",
         false},
        {"gf3-w2-v-pi1", 3, 1, false, {"0", "pi^-1"}, 1, 1, "0", "1", "0",
         "1", false},
        {"gf3y-w2-ypi1", 3, 1, true, {"y*pi^-1", "0"}, 3, 3, "2*y^2", "y^3",
         "0", "y^3", false},
        {"gf2y-y1pi2", 2, 1, true, {"(y+1)*pi^-2"}, 2, 1, "1", "0", nullptr,
         nullptr, true},
        {"gf2y-yypi2", 2, 1, true, {"(y^2+y)*pi^-2"}, 2, 1, "1", "0", nullptr,
         nullptr, true},
        {"gf2y-ratpi2", 2, 1, true, {"(y+1)/y*pi^-2"}, 2, 1, "(1)/(y^2)", "0",
         nullptr, nullptr, true},
        {"gf2y-ypi4", 2, 1, true, {"y*pi^-4"}, 4, 3, "1", "0", "1", "0",
         false},
        {"gf9-gpi3", 3, 2, false, {"g*pi^-3"}, 1, 1, "0", "2*g+1", "0",
         "2*g+1", false},
        {"gf4-w2", 2, 2, false, {"g*pi^-1", "g*pi^-1"}, 2, 2, "0", "g+1", "0",
         "g+1", false},
        {"gf3y-invpi1", 3, 1, true, {"(1)/(y+1)*pi^-1"}, 1, 1,
         "(1)/(y^2+2*y+1)", "(1)/(y+1)", "0", "(1)/(y+1)", false},
        {"gf2y-w2-pair", 2, 1, true, {"y*pi^-2", "y^3*pi^-2"}, 4, 3, "y", "0",
         "y", "0", false},
        {"gf5-w2", 5, 1, false, {"pi^-1", "pi^-2"}, 5, 5, "0", "1", "0", "1",
         false},
        {"gf2y-ypi6", 2, 1, true, {"y*pi^-6"}, 6, 5, "1", "0", "1", "0",
         false},
    };
    return suite;
}

WittVec parse_witt(const FieldConfig& F,
                   const std::vector<const char*>& comps) {
    WittVec x;
    for (const char* s : comps) x.push_back(parse_element(s, F));
    return x;
}

// --- suite: witt-structure -------------------------------------------------

unsigned weighted_degree(const Monomial& mo, Coeff p, unsigned m,
                         bool second_half_weightless) {
    unsigned long d = 0;
    for (unsigned i = 0; i <= m; ++i)
        d += mo.exp[i] * static_cast<unsigned long>(pow_long(p, i));
    for (unsigned i = 0; i <= m; ++i) {
        const unsigned w = second_half_weightless ? 0 : pow_long(p, i);
        d += mo.exp[m + 1 + i] * static_cast<unsigned long>(w);
    }
    return static_cast<unsigned>(d);
}

bool has_second_half(const Monomial& mo, unsigned m) {
    for (unsigned i = 0; i <= m; ++i)
        if (mo.exp[m + 1 + i]) return true;
    return false;
}

SuiteResult suite_witt_structure() {
    Checker c("witt-structure");
    for (Coeff p : {2u, 3u}) {
        const WittContext& ctx = WittContext::get(p, 3);
        const unsigned m = 3;
        for (unsigned n = 0; n <= m; ++n) {
            const unsigned target =
                static_cast<unsigned>(pow_long(p, n));
            for (const auto& [mo, coeff] : ctx.rescale_polys_int()[n].terms) {
                (void)coeff;
                c.check(weighted_degree(mo, p, m, true) == target,
                        "rescale component not isobaric");
                c.check(has_second_half(mo, m),
                        "rescale component has a term outside ideal(Y)");
            }
            for (const auto& [mo, coeff] : ctx.sum_polys_int()[n].terms) {
                (void)coeff;
                c.check(weighted_degree(mo, p, m, false) == target,
                        "sum component not isobaric");
            }
            // S_n(X, 0) = X_n
            unsigned found = 0;
            for (const auto& [mo, coeff] : ctx.sum_polys()[n].terms) {
                if (has_second_half(mo, m)) continue;
                ++found;
                Monomial want{};
                want.exp[n] = 1;
                c.check(mo == want && coeff == 1, "S_n(X, 0) != X_n");
            }
            c.check(found == 1, "S_n(X, 0) != X_n");
        }
        // frozen: Q_0 = X0*Y0
        {
            const auto& q0 = ctx.rescale_polys_int()[0];
            Monomial want{};
            want.exp[0] = 1;
            want.exp[m + 1] = 1;
            c.check(q0.terms.size() == 1 && q0.terms[0].first == want &&
                        q0.terms[0].second == 1,
                    "Q_0 != X0*Y0");
        }
    }
    // frozen shapes at p = 2
    {
        const WittContext& ctx = WittContext::get(2, 1);
        const unsigned m = 1;
        auto term_of = [&](const UnivPoly& P, const Monomial& mo,
                           long& coeff_out) {
            for (const auto& [mm, cc] : P.terms)
                if (mm == mo) {
                    coeff_out = static_cast<long>(cc);
                    return true;
                }
            return false;
        };
        // Q_1 = X0^2 Y0 + X1 Y1
        {
            const auto& q1 = ctx.rescale_polys_int()[1];
            Monomial a{}, b{};
            a.exp[0] = 2;
            a.exp[m + 1] = 1;
            b.exp[1] = 1;
            b.exp[m + 2] = 1;
            long ca = 0, cb = 0;
            c.check(q1.terms.size() == 2 && term_of(q1, a, ca) &&
                        term_of(q1, b, cb) && ca == 1 && cb == 1,
                    "Q_1 != X0^2*Y0 + X1*Y1 at p=2");
        }
        // S_1 = X1 + Y1 - X0*Y0 over Z, so X1 + Y1 + X0*Y0 mod 2
        {
            const auto& s1 = ctx.sum_polys_int()[1];
            Monomial a{}, b{}, d{};
            a.exp[1] = 1;
            b.exp[m + 2] = 1;
            d.exp[0] = 1;
            d.exp[m + 1] = 1;
            long ca = 0, cb = 0, cd = 0;
            c.check(s1.terms.size() == 3 && term_of(s1, a, ca) &&
                        term_of(s1, b, cb) && term_of(s1, d, cd) && ca == 1 &&
                        cb == 1 && cd == -1,
                    "S_1 != X1 + Y1 - X0*Y0 at p=2");
            const auto& s1m = ctx.sum_polys()[1];
            bool ok = s1m.terms.size() == 3;
            for (const auto& [mm, cc] : s1m.terms)
                ok = ok && (mm == a || mm == b || mm == d) && cc == 1;
            c.check(ok, "S_1 != X1 + Y1 + X0*Y0 mod 2");
        }
        // negation mod 2: (x0, x1) -> (x0, x0^2 + x1)
        {
            const auto& n0 = ctx.neg_polys()[0];
            const auto& n1 = ctx.neg_polys()[1];
            Monomial x0{}, x1{}, x0sq{};
            x0.exp[0] = 1;
            x1.exp[1] = 1;
            x0sq.exp[0] = 2;
            c.check(n0.terms.size() == 1 && n0.terms[0].first == x0 &&
                        n0.terms[0].second == 1,
                    "N_0 != X0 mod 2");
            bool ok = n1.terms.size() == 2;
            for (const auto& [mm, cc] : n1.terms)
                ok = ok && (mm == x1 || mm == x0sq) && cc == 1;
            c.check(ok, "N_1 != X0^2 + X1 mod 2");
        }
    }
    return c.r;
}

// --- suite: witt-identity --------------------------------------------------

SuiteResult suite_witt_identity() {
    Checker c("witt-identity");
    TrialReport a = verify_q_identity(2, 1, 4, 10000, 0xA11CE5ULL);
    c.check(a.ok() && a.trials == 10000,
            "rescale identity failed over GF(2)[t]/(t^4): " + a.first_failure);
    TrialReport b = verify_q_identity(3, 2, 3, 1000, 0xB0B5EEDULL);
    c.check(b.ok() && b.trials == 1000,
            "rescale identity failed over GF(3)[t]/(t^3): " + b.first_failure);
    return c.r;
}

// --- suites: sections ------------------------------------------------------

GradedNormalForm random_log_nf(const FieldConfig& F, std::mt19937_64& rng,
                               long n, unsigned r) {
    GradedNormalForm nf;
    nf.basis = Basis::Log;
    nf.n = n;
    nf.r = r;
    nf.rp = 0;
    nf.n0 = n / pow_long(static_cast<long>(F.p()), r);
    nf.layers.assign(r, {});
    if (F.has_y())
        for (unsigned j = 0; j < r; ++j)
            for (Coeff k = 1; k < F.p(); ++k)
                nf.layers[j].push_back(rng() % 2 ? random_res(F, rng, true)
                                                 : res_zero(F));
    nf.x = rng() % 3 == 0 ? res_zero(F) : random_res(F, rng, false);
    return nf;
}

bool nf_is_zero(const GradedNormalForm& nf) {
    if (!res_is_zero(nf.x)) return false;
    for (const auto& row : nf.layers)
        for (const auto& v : row)
            if (!res_is_zero(v)) return false;
    return true;
}

SuiteResult suite_sections_log() {
    Checker c("sections-log");
    std::mt19937_64 rng(0x5EC7109ULL);
    for (Coeff p : {2u, 3u, 5u}) {
        for (bool rational : {true, false}) {
            FieldConfig F = make_field(p, 1, rational);
            const unsigned want = rational ? 140 : 60;
            unsigned done = 0, guard = 0;
            while (done < want && ++guard < 100000) {
                const unsigned r = rng() % 3;
                const long pr = pow_long(p, r);
                if (40 / pr == 0) continue;
                long n0 = 1 + static_cast<long>(rng() % (40 / pr));
                if (n0 % p == 0) continue;
                const long n = n0 * pr;
                GradedNormalForm nf = random_log_nf(F, rng, n, r);
                if (nf_is_zero(nf)) continue;
                WittVec v = rho_section(F, nf);
                ConductorReport rep = conductor_report(F, v);
                c.check(rep.sw_exact && rep.sw == n,
                        "section of a level-" + std::to_string(n) +
                            " class came back at level " +
                            std::to_string(rep.sw));
                c.check(rep.rsw_nf && *rep.rsw_nf == nf,
                        "log normal form did not reassemble (n = " +
                            std::to_string(n) + ")");
                ++done;
            }
            c.check(done == want, "sampling starved");
        }
    }
    return c.r;
}

SuiteResult suite_sections_plain() {
    Checker c("sections-plain");
    std::mt19937_64 rng(0xCAFE5EC7ULL);
    for (Coeff p : {2u, 3u, 5u}) {
        for (bool rational : {true, false}) {
            FieldConfig F = make_field(p, 1, rational);
            const unsigned want = rational ? 140 : 60;
            unsigned done = 0, guard = 0;
            while (done < want && ++guard < 100000) {
                const long n = 1 + static_cast<long>(rng() % 40);
                if (p == 2 && n == 1) continue;
                const unsigned r = ord_p(p, static_cast<unsigned long>(n) + 1);
                const unsigned rp = ord_p(p, static_cast<unsigned long>(n));
                if (r > 2 || rp > 2) continue;
                GradedNormalForm nf;
                nf.basis = Basis::Plain;
                nf.n = n;
                nf.n0 = 0;
                nf.r = r;
                nf.rp = rp;
                nf.layers.assign(r, {});
                if (F.has_y())
                    for (unsigned j = 0; j < r; ++j)
                        for (Coeff k = 1; k < p; ++k)
                            nf.layers[j].push_back(
                                rng() % 2 ? random_res(F, rng, true)
                                          : res_zero(F));
                nf.x = rng() % 3 == 0 ? res_zero(F)
                                      : random_res(F, rng, false);
                if (nf_is_zero(nf)) continue;
                WittVec v = kappa_section(F, nf);
                ConductorReport rep = conductor_report(F, v);
                c.check(rep.sw_exact && rep.sw_mod == n,
                        "plain section of a level-" + std::to_string(n) +
                            " class came back at level " +
                            std::to_string(rep.sw_mod));
                c.check(rep.rsw_mod_nf && *rep.rsw_mod_nf == nf,
                        "plain normal form did not reassemble (n = " +
                            std::to_string(n) + ")");
                ++done;
            }
            c.check(done == want, "sampling starved");
        }
    }
    return c.r;
}

// --- suite: differential-additivity ---------------------------------------

SuiteResult suite_additivity() {
    Checker c("differential-additivity");
    std::mt19937_64 rng(0xADD171ULL);
    const std::vector<std::pair<Coeff, bool>> fields = {
        {2, true}, {3, true}, {5, true}, {2, false}, {3, false}};
    for (unsigned t = 0; t < 500; ++t) {
        auto [p, rational] = fields[t % fields.size()];
        FieldConfig F = make_field(p, 1, rational);
        const unsigned m = rng() % 3;
        WittVec x = witt_zero(m), y = witt_zero(m);
        for (unsigned i = 0; i <= m; ++i) {
            x[i] = random_lau(F, rng, -4, 1);
            y[i] = random_lau(F, rng, -4, 1);
        }
        LocalForm lhs = witt_differential(F, witt_add(F, x, y));
        LocalForm rhs = kform_add(F, witt_differential(F, x),
                                  witt_differential(F, y));
        c.check(lhs == rhs, "witt differential is not additive");
    }
    return c.r;
}

// --- suite: filtration -----------------------------------------------------

SuiteResult suite_filtration() {
    Checker c("filtration");
    std::mt19937_64 rng(0xF117ULL);
    const std::vector<std::pair<Coeff, bool>> fields = {
        {2, true}, {3, true}, {5, true}, {2, false}, {3, false}};

    for (unsigned t = 0; t < 500; ++t) {
        auto [p, rational] = fields[t % fields.size()];
        FieldConfig F = make_field(p, 1, rational);
        const unsigned m = rng() % 3;
        const long n = 1 + static_cast<long>(rng() % 10);
        WittVec x = random_fil_member(F, rng, m, n);
        c.check(witt_level(p, x) <= n, "sampler left the filtration");
        c.check(form_in_filtration(witt_differential(F, x), n, Basis::Log),
                "witt differential left fil_n");
    }

    for (unsigned t = 0; t < 500; ++t) {
        auto [p, rational] = fields[t % fields.size()];
        FieldConfig F = make_field(p, 1, rational);
        const unsigned m = rng() % 3;
        const long n = 1 + static_cast<long>(rng() % 10);
        WittVec x = random_fil_member(F, rng, m, n);
        WittVec y = random_fil_member(F, rng, m, n);
        c.check(witt_level(p, witt_add(F, x, y)) <= n,
                "fil_n not closed under addition");
        if (m + 2 <= kMaxWittLength)
            c.check(witt_level(p, verschiebung(x)) <= n,
                    "V left the filtration");
        c.check(witt_level(p, witt_frobenius(F, x)) <=
                    n * static_cast<long>(p),
                "F(fil_n) left fil_(pn)");
    }

    struct Combo {
        Coeff p;
        unsigned e;
        bool rational;
        unsigned m;
        long n;
        unsigned long trials;
    };
    const std::vector<Combo> combos = {
        {2, 1, true, 1, 1, 80}, {2, 1, true, 1, 3, 80},
        {2, 1, true, 2, 3, 60}, {3, 1, true, 1, 2, 80},
        {3, 1, true, 2, 8, 60}, {5, 1, true, 1, 4, 60},
        {2, 1, false, 0, 1, 40}, {3, 1, false, 1, 8, 40},
    };
    for (const auto& co : combos) {
        FieldConfig F = make_field(co.p, co.e, co.rational);
        TrialReport r =
            fil_prime_generator_sample(F, co.m, co.n, co.trials, 0xF11FULL);
        c.check(r.ok(), "fil' sampling failed: " + r.first_failure);
    }

    // fixed negative cases: depth just past the bound
    {
        FieldConfig F = make_field(2, 1, false);
        WittVec x = witt_zero(1);
        x[0] = parse_element("pi^-2", F);  // depth 4
        c.check(!fil_membership(2, x, 3), "fil membership false negative");
        c.check(fil_membership(2, x, 4), "fil membership false positive");
        // (0, pi^-2) lies in fil'_1 via V(fil_2 W_1) but not in fil_1
        WittVec v = witt_zero(1);
        v[1] = parse_element("pi^-2", F);
        c.check(!fil_membership(2, v, 1), "fil membership false positive");
        c.check(fil_prime_membership(2, v, 1), "fil' componentwise test");
    }
    return c.r;
}

// --- suite: independence ---------------------------------------------------

bool same_opt_form(const std::optional<GradedForm>& a,
                   const std::optional<GradedForm>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || *a == *b;
}

SuiteResult suite_independence() {
    Checker c("independence");
    std::mt19937_64 rng(0x1DEED5ULL);
    for (const auto& inst : curated_suite()) {
        FieldConfig F = make_field(inst.p, inst.e, inst.rational);
        WittVec x = parse_witt(F, inst.comps);
        ConductorReport base = conductor_report(F, x);
        const unsigned m = static_cast<unsigned>(x.size()) - 1;
        for (unsigned t = 0; t < 100; ++t) {
            WittVec y = witt_zero(m);
            for (unsigned i = 0; i <= m; ++i)
                y[i] = random_lau(F, rng, -2, 1);
            WittVec z = witt_add(F, x, frobenius_minus_one(F, y));
            ConductorReport rep = conductor_report(F, z);
            c.check(rep.sw_exact == base.sw_exact && rep.sw == base.sw &&
                        rep.sw_mod == base.sw_mod,
                    std::string("conductor moved under (F-1) for ") +
                        inst.name);
            c.check(same_opt_form(rep.rsw, base.rsw) &&
                        same_opt_form(rep.rsw_mod, base.rsw_mod) &&
                        rep.rsw_mod_unsupported == base.rsw_mod_unsupported,
                    std::string("refined value moved under (F-1) for ") +
                        inst.name);
        }
    }
    return c.r;
}

// --- suite: oracle-agreement -----------------------------------------------

SuiteResult suite_oracle_agreement() {
    Checker c("oracle-agreement");
    struct OInst {
        Coeff p;
        bool rational;
        std::vector<const char*> comps;
    };
    std::vector<OInst> insts;
    for (const auto& e : curated_suite())
        if (e.p <= 3 && e.e == 1 && e.comps.size() <= 2)
            insts.push_back({e.p, e.rational, e.comps});
    const std::vector<OInst> extra = {
        {2, false, {"pi^-1"}},
        {2, false, {"pi^-5"}},
        {2, false, {"pi^-6"}},
        {2, false, {"pi^-7"}},
        {2, false, {"pi^-2+pi^-1"}},
        {2, false, {"pi^-2+1"}},
        {2, false, {"pi^-6+pi^-3"}},
        {2, true, {"y*pi^-1"}},
        {2, true, {"y*pi^-3"}},
        {2, true, {"(y+1)*pi^-1"}},
        {2, true, {"y^2*pi^-2"}},
        {2, true, {"y^2*pi^-4"}},
        {2, false, {"pi^-2", "0"}},
        {2, false, {"0", "pi^-2"}},
        {2, true, {"y*pi^-1", "y*pi^-1"}},
        {2, true, {"0", "y^2*pi^-2"}},
        {3, false, {"pi^-1"}},
        {3, false, {"pi^-2"}},
        {3, false, {"pi^-4"}},
        {3, false, {"pi^-3+pi^-1"}},
        {3, false, {"2*pi^-3"}},
        {3, false, {"2*pi^-6+pi^-2"}},
        {3, true, {"y*pi^-1"}},
        {3, true, {"y^3*pi^-3"}},
        {3, true, {"(y+1)*pi^-3"}},
        {3, true, {"y^2*pi^-1"}},
        {3, false, {"pi^-1", "0"}},
        {3, false, {"0", "pi^-2"}},
        {3, false, {"pi^-1", "pi^-1"}},
        {3, false, {"0", "pi^-3"}},
    };
    insts.insert(insts.end(), extra.begin(), extra.end());
    c.check(insts.size() >= 50, "instance list shrank below 50");

    for (const auto& inst : insts) {
        FieldConfig F = make_field(inst.p, 1, inst.rational);
        WittVec x = parse_witt(F, inst.comps);
        const long sw = swan(F, x);
        BruteOutcome b = brute_reduce(F, x, 7, 2, 30000);
        c.check(b.bound == sw,
                "oracle bound " + std::to_string(b.bound) + " != swan " +
                    std::to_string(sw) + " on " +
                    render_witt_inline(F, x));
    }
    return c.r;
}

// --- suite: theorem-outputs ------------------------------------------------

SuiteResult suite_theorem_outputs() {
    Checker c("theorem-outputs");
    for (const auto& inst : curated_suite()) {
        FieldConfig F = make_field(inst.p, inst.e, inst.rational);
        WittVec x = parse_witt(F, inst.comps);
        ConductorReport rep = conductor_report(F, x);
        const std::string tag = std::string(" on ") + inst.name;

        c.check(rep.sw_exact && rep.sw == inst.sw, "sw mismatch" + tag);
        c.check(rep.sw_mod == inst.sw_mod, "sw' mismatch" + tag);
        c.check(rep.sw - 1 <= rep.sw_mod && rep.sw_mod <= rep.sw,
                "sw' bound violated" + tag);

        // definitional cross-check of sw' on the reduced representative
        c.check(fil_prime_membership(inst.p, rep.reduced, rep.sw_mod),
                "reduced representative outside fil'" + tag);
        if (rep.sw_mod > 0)
            c.check(!fil_prime_membership(inst.p, rep.reduced, rep.sw_mod - 1),
                    "fil' level overshot" + tag);

        if (inst.rsw_a) {
            GradedForm want{Basis::Log, inst.sw,
                            parse_residue_element(inst.rsw_a, F),
                            parse_residue_element(inst.rsw_b, F)};
            c.check(rep.rsw && *rep.rsw == want, "rsw mismatch" + tag);
            c.check(rep.log_slope && *rep.log_slope == inst.sw,
                    "log slope mismatch" + tag);
            c.check(rep.log_char_point &&
                        *rep.log_char_point == graded_neg(F, want),
                    "log characteristic point mismatch" + tag);
        } else {
            c.check(!rep.rsw && !rep.log_slope, "unexpected rsw" + tag);
        }

        c.check(rep.rsw_mod_unsupported == inst.rswm_unsupported,
                "unsupported-range flag mismatch" + tag);
        if (inst.rswm_a) {
            GradedForm want{Basis::Plain, inst.sw_mod,
                            parse_residue_element(inst.rswm_a, F),
                            parse_residue_element(inst.rswm_b, F)};
            c.check(rep.rsw_mod && *rep.rsw_mod == want,
                    "rsw' mismatch" + tag);
            if (inst.sw_mod > 1) {
                c.check(rep.slope && *rep.slope == inst.sw_mod + 1,
                        "slope mismatch" + tag);
                c.check(rep.char_point &&
                            *rep.char_point == graded_neg(F, want),
                        "characteristic point mismatch" + tag);
            } else {
                c.check(!rep.slope, "slope outside the theorem range" + tag);
            }
        } else {
            c.check(!rep.rsw_mod, "unexpected rsw'" + tag);
        }
    }
    return c.r;
}

// --- suite: render-roundtrip -----------------------------------------------

SuiteResult suite_roundtrip() {
    Checker c("render-roundtrip");
    std::mt19937_64 rng(0x707D812ULL);
    const std::vector<std::tuple<Coeff, unsigned, bool>> fields = {
        {2, 1, true}, {3, 1, true}, {2, 2, false},
        {3, 2, true}, {5, 1, false}};
    for (unsigned t = 0; t < 300; ++t) {
        auto [p, e, rational] = fields[t % fields.size()];
        FieldConfig F = make_field(p, e, rational);
        LaurentElem v = random_lau(F, rng, -5, 4);
        const std::string s = render_lau(F, v);
        LaurentElem back = parse_element(s, F);
        c.check(back == v, "parse(render) changed the value: " + s);
        c.check(render_lau(F, back) == s, "render not canonical: " + s);
    }
    {
        FieldConfig F = make_field(2, 1, true);
        LaurentElem a = parse_element("y*pi^-2", F);
        c.check(lau_valuation(a) == val_of(-2) &&
                    lau_coeff(F, a, -2) == res_y(F),
                "y*pi^-2 parsed wrong");
        LaurentElem b = parse_element("(y+1)/y * pi^-3 + 1", F);
        c.check(b.terms.size() == 2 && b.terms[0].exp == -3 &&
                    b.terms[1].exp == 0,
                "support of (y+1)/y*pi^-3 + 1 is not {-3, 0}");
        FieldConfig P = make_field(2, 1, false);
        LaurentElem d = parse_element("pi^-4 + pi^-1", P);
        c.check(d.terms.size() == 2 && d.terms[0].exp == -4 &&
                    d.terms[1].exp == -1,
                "pi^-4 + pi^-1 parsed wrong");
    }
    return c.r;
}

}  // namespace

std::vector<std::string> selftest_suite_names() {
    return {"witt-structure",  "witt-identity",
            "sections-log",    "sections-plain",
            "differential-additivity", "filtration",
            "independence",    "oracle-agreement",
            "theorem-outputs", "render-roundtrip"};
}

SuiteResult run_selftest_suite(const std::string& name) {
    if (name == "witt-structure") return suite_witt_structure();
    if (name == "witt-identity") return suite_witt_identity();
    if (name == "sections-log") return suite_sections_log();
    if (name == "sections-plain") return suite_sections_plain();
    if (name == "differential-additivity") return suite_additivity();
    if (name == "filtration") return suite_filtration();
    if (name == "independence") return suite_independence();
    if (name == "oracle-agreement") return suite_oracle_agreement();
    if (name == "theorem-outputs") return suite_theorem_outputs();
    if (name == "render-roundtrip") return suite_roundtrip();
    throw ConfigError("unknown selftest suite: " + name);
}

std::vector<SuiteResult> run_selftests(const std::vector<std::string>& names) {
    std::vector<std::string> todo = names.empty() ? selftest_suite_names()
                                                  : names;
    std::vector<SuiteResult> out;
    out.reserve(todo.size());
    for (const auto& n : todo) out.push_back(run_selftest_suite(n));
    return out;
}

}  // namespace swanlab
