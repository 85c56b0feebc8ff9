#include "swanlab/ramification.hpp"

#include <deque>
#include <string>
#include <unordered_set>

#include "swanlab/errors.hpp"
#include "swanlab/render.hpp"

namespace swanlab {

namespace {

long pow_long(long b, unsigned e) {
    long r = 1;
    while (e--) r *= b;
    return r;
}

std::string state_key(const FieldConfig& F, const WittVec& x) {
    return render_witt_inline(F, x);
}

// One pass of leading-term elimination. Returns false when the cap was
// hit before a fixed point was reached.
bool phase1(const FieldConfig& F, WittVec& x, unsigned long cap,
            unsigned long& steps) {
    const Coeff p = F.p();
    for (;;) {
        bool touched = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (lau_is_zero(x[i])) continue;
            const long v = x[i].terms.front().exp;
            if (v >= 0) continue;
            if (v % static_cast<long>(p) != 0) continue;
            const ResidueElem& lc = x[i].terms.front().coeff;
            if (!res_is_pth_power(F, lc)) continue;
            ResidueElem u = res_pth_root(F, lc);
            WittVec move = witt_zero(static_cast<unsigned>(x.size()) - 1);
            move[i] = lau_term(F, u, v / static_cast<long>(p));
            x = witt_sub(F, x, frobenius_minus_one(F, move));
            if (++steps >= cap) return false;
            touched = true;
            break;
        }
        if (!touched) return true;
    }
}

std::optional<GradedForm> certificate(const FieldConfig& F, const WittVec& x,
                                      long n) {
    GradedForm g = graded_class(F, witt_differential(F, x), n, Basis::Log);
    if (graded_is_zero(g)) return std::nullopt;
    return g;
}

// Move coefficients for the bounded search: GF(p)^* multiples of 1 and of
// every p-th root of a p-th-power coefficient present in the state.
std::vector<ResidueElem> move_coefficients(const FieldConfig& F,
                                           const WittVec& x) {
    std::vector<ResidueElem> base{res_one(F)};
    auto push = [&](const ResidueElem& c) {
        for (const auto& e : base)
            if (e == c) return;
        base.push_back(c);
    };
    for (const auto& comp : x)
        for (const auto& t : comp.terms)
            if (res_is_pth_power(F, t.coeff))
                push(res_pth_root(F, t.coeff));
    std::vector<ResidueElem> out;
    for (const auto& c : base)
        for (Coeff a = 1; a < F.p(); ++a) {
            ResidueElem v = res_mul(F, res_from_int(F, a), c);
            bool seen = false;
            for (const auto& e : out)
                if (e == v) seen = true;
            if (!seen) out.push_back(v);
        }
    return out;
}

// Bounded breadth-first search for a representative of level < n.
std::optional<WittVec> combined_search(const FieldConfig& F, const WittVec& x0,
                                       long n, const ReduceOptions& opts,
                                       unsigned long phase1_cap,
                                       unsigned long& steps) {
    const Coeff p = F.p();
    const unsigned m = static_cast<unsigned>(x0.size()) - 1;
    const long box = (n + static_cast<long>(p) - 1) / static_cast<long>(p);
    unsigned long used = 0;

    std::deque<WittVec> frontier{x0};
    std::unordered_set<std::string> seen{state_key(F, x0)};

    for (unsigned depth = 0; depth < opts.search_depth; ++depth) {
        std::deque<WittVec> next;
        for (const auto& state : frontier) {
            auto coeffs = move_coefficients(F, state);
            for (unsigned i = 0; i <= m; ++i) {
                const long w = pow_long(static_cast<long>(p), m - i);
                for (long j = -(box / w); j <= 0; ++j) {
                    const unsigned kmax = F.has_y() ? p - 1 : 0;
                    for (unsigned k = 0; k <= kmax; ++k) {
                        for (const auto& c : coeffs) {
                            if (++used > opts.search_budget)
                                return std::nullopt;
                            ++steps;
                            ResidueElem cc = c;
                            if (k > 0)
                                cc = res_mul(
                                    F, cc,
                                    res_pow(F, res_y(F), static_cast<long>(k)));
                            WittVec move = witt_zero(m);
                            move[i] = lau_term(F, cc, j);
                            WittVec z = witt_sub(
                                F, state, frobenius_minus_one(F, move));
                            unsigned long s2 = 0;
                            phase1(F, z, phase1_cap, s2);
                            if (witt_level(p, z) < n) return z;
                            auto key = state_key(F, z);
                            if (seen.insert(key).second) next.push_back(z);
                        }
                    }
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return std::nullopt;
}

unsigned long default_phase1_cap(const FieldConfig& F, const WittVec& x) {
    const long est = witt_level(F.p(), x);
    return 10UL * static_cast<unsigned long>(est + 1) * x.size();
}

}  // namespace

WittVec theta(const FieldConfig& F, std::size_t witt_length,
              const LaurentElem& a, unsigned j) {
    if (witt_length == 0 || witt_length > kMaxWittLength)
        throw ConfigError("unsupported Witt length");
    if (j >= witt_length)
        throw ConfigError("theta slot exceeds the context length");
    WittVec x = witt_zero(static_cast<unsigned>(witt_length) - 1);
    x[witt_length - 1 - j] = a;
    return x;
}

ReduceOutcome reduce_representative(const FieldConfig& F, const WittVec& x,
                                    const ReduceOptions& opts) {
    if (x.empty() || x.size() > kMaxWittLength)
        throw ConfigError("unsupported Witt length");
    const Coeff p = F.p();
    const unsigned long cap =
        opts.phase1_cap ? opts.phase1_cap : default_phase1_cap(F, x);

    ReduceOutcome out;
    out.rep = x;
    if (!phase1(F, out.rep, cap, out.steps)) {
        out.level = witt_level(p, out.rep);
        out.exact = false;
        return out;
    }
    for (;;) {
        out.level = witt_level(p, out.rep);
        if (out.level == 0) {
            out.exact = true;
            return out;
        }
        if (certificate(F, out.rep, out.level)) {
            out.exact = true;
            return out;
        }
        auto better = combined_search(F, out.rep, out.level, opts, cap,
                                      out.steps);
        if (!better) {
            out.exact = false;
            return out;
        }
        out.rep = std::move(*better);
        if (!phase1(F, out.rep, cap, out.steps)) {
            out.level = witt_level(p, out.rep);
            out.exact = false;
            return out;
        }
    }
}

namespace {

// The layer-sum Witt vector that the section formulas share. exp_num is
// n for the log variant and n+1 for the plain one; layer j contributes
// theta_j(x_{k,j}^p y^k pi^(-exp_num / p^j)).
WittVec layer_vector(const FieldConfig& F, const GradedNormalForm& nf,
                     std::size_t len, long exp_num) {
    WittVec acc = witt_zero(static_cast<unsigned>(len) - 1);
    const Coeff p = F.p();
    for (unsigned j = 0; j < nf.layers.size(); ++j) {
        const long e = -(exp_num / pow_long(static_cast<long>(p), j));
        for (std::size_t k = 1; k <= nf.layers[j].size(); ++k) {
            const ResidueElem& c = nf.layers[j][k - 1];
            if (res_is_zero(c)) continue;
            if (j >= len)
                throw ConfigError("normal form does not fit the context");
            ResidueElem arg = res_pow(F, c, p);
            arg = res_mul(F, arg,
                          res_pow(F, res_y(F), static_cast<long>(k)));
            acc = witt_add(F, acc, theta(F, len, lau_term(F, arg, e), j));
        }
    }
    return acc;
}

WittVec raw_rho(const FieldConfig& F, const GradedNormalForm& nf,
                std::size_t len) {
    WittVec acc = layer_vector(F, nf, len, nf.n);
    if (!res_is_zero(nf.x)) {
        if (nf.r >= len)
            throw ConfigError("normal form does not fit the context");
        acc = witt_add(
            F, acc, theta(F, len, lau_term(F, nf.x, -nf.n0), nf.r));
    }
    return acc;
}

WittVec raw_kappa(const FieldConfig& F, const GradedNormalForm& nf,
                  std::size_t len) {
    WittVec acc = layer_vector(F, nf, len, nf.n + 1);
    if (!res_is_zero(nf.x)) {
        if (nf.rp >= len)
            throw ConfigError("normal form does not fit the context");
        const Coeff p = F.p();
        const long npart = nf.n / pow_long(static_cast<long>(p), nf.rp);
        // scalar -(1 / (n p^-rp)) mod p
        const long inv_src = npart % static_cast<long>(p);
        ResidueElem s =
            res_neg(F, res_inv(F, res_from_int(F, inv_src)));
        // s lies in the prime field; read it off as an integer scalar
        Coeff scalar = res_is_zero(s) ? 0 : s.num.c[0].c[0];
        WittVec t = theta(F, len, lau_term(F, nf.x, -npart), nf.rp);
        acc = witt_add(F, acc, witt_scalar(F, t, scalar));
    }
    return acc;
}

}  // namespace

WittVec rho_section(const FieldConfig& F, const GradedNormalForm& nf) {
    if (nf.basis != Basis::Log)
        throw ConfigError("rho_section expects a log normal form");
    return witt_neg(F, raw_rho(F, nf, nf.r + 1));
}

WittVec kappa_section(const FieldConfig& F, const GradedNormalForm& nf) {
    if (nf.basis != Basis::Plain)
        throw ConfigError("kappa_section expects a plain normal form");
    if (F.p() == 2 && nf.n == 1)
        throw UnsupportedRangeError("no section at p = 2, level 1");
    const std::size_t len = nf.r > nf.rp ? nf.r : nf.rp + 1;
    return witt_neg(F, raw_kappa(F, nf, len ? len : 1));
}

ConductorReport conductor_report(const FieldConfig& F, const WittVec& x,
                                 const ReduceOptions& opts) {
    const Coeff p = F.p();
    ConductorReport rep;
    ReduceOutcome ro = reduce_representative(F, x, opts);
    rep.reduced = ro.rep;
    rep.steps = ro.steps;
    rep.sw = ro.level;
    rep.sw_exact = ro.exact;
    if (!ro.exact) {
        rep.budget_hit = true;
        rep.sw_mod = ro.level;  // fil_n is contained in fil'_n
        rep.sw_mod_exact = false;
        return rep;
    }
    if (rep.sw == 0) {
        rep.sw_mod = 0;
        return rep;
    }

    const long n = rep.sw;
    LocalForm omega = witt_differential(F, ro.rep);
    GradedForm g = graded_class(F, omega, n, Basis::Log);
    rep.rsw = graded_neg(F, g);
    rep.rsw_nf = graded_normal_form(F, *rep.rsw);

    const bool beta_zero = res_is_zero(rep.rsw->beta);
    if (n % static_cast<long>(p) != 0 || !beta_zero) {
        rep.sw_mod = n;
        if (p == 2 && n == 1) {
            rep.rsw_mod_unsupported = true;
        } else {
            rep.rsw_mod = graded_neg(F, graded_class(F, omega, n, Basis::Plain));
            rep.rsw_mod_nf = graded_normal_form(F, *rep.rsw_mod);
        }
    } else {
        rep.sw_mod = n - 1;
        if (p == 2 && rep.sw_mod == 1) {
            rep.rsw_mod_unsupported = true;
        } else {
            // Split off the level-n part rho(rsw_nf); the remainder of the
            // class lies one level down, and the modified graded class of
            // the recombined representative is read off there.
            WittVec raw = raw_rho(F, *rep.rsw_nf, x.size());
            WittVec x1 = witt_add(F, ro.rep, raw);
            ReduceOutcome r1 = reduce_representative(F, x1, opts);
            if (!r1.exact) {
                rep.budget_hit = true;
            } else {
                if (r1.level > n - 1)
                    throw Error("level-n part did not cancel; this is a bug");
                WittVec xpp = witt_sub(F, r1.rep, raw);
                if (!fil_prime_membership(p, xpp, n - 1))
                    throw Error("recombined representative escaped fil'; "
                                "this is a bug");
                GradedForm gp = graded_class(F, witt_differential(F, xpp),
                                             n - 1, Basis::Plain);
                rep.rsw_mod = graded_neg(F, gp);
                if (graded_is_zero(*rep.rsw_mod))
                    throw Error("modified refined conductor vanished; "
                                "this is a bug");
                rep.rsw_mod_nf = graded_normal_form(F, *rep.rsw_mod);
            }
        }
    }

    if (rep.sw >= 1) {
        rep.log_slope = rep.sw;
        rep.log_char_point = graded_neg(F, *rep.rsw);
    }
    if (rep.sw_mod > 1) {
        rep.slope = rep.sw_mod + 1;
        if (rep.rsw_mod) rep.char_point = graded_neg(F, *rep.rsw_mod);
    }
    return rep;
}

namespace {

ConductorReport certified_report(const FieldConfig& F, const WittVec& x,
                                 const ReduceOptions& opts) {
    ConductorReport rep = conductor_report(F, x, opts);
    if (!rep.sw_exact)
        throw ReductionBudgetError("reduction budget exhausted; "
                                   "conductor known only as an upper bound");
    return rep;
}

}  // namespace

long swan(const FieldConfig& F, const WittVec& x, const ReduceOptions& opts) {
    return certified_report(F, x, opts).sw;
}

GradedForm refined_swan(const FieldConfig& F, const WittVec& x,
                        const ReduceOptions& opts) {
    ConductorReport rep = certified_report(F, x, opts);
    if (!rep.rsw)
        throw OutOfTheoremRangeError("refined conductor needs sw >= 1");
    return *rep.rsw;
}

long swan_modified(const FieldConfig& F, const WittVec& x,
                   const ReduceOptions& opts) {
    return certified_report(F, x, opts).sw_mod;
}

GradedForm refined_swan_modified(const FieldConfig& F, const WittVec& x,
                                 const ReduceOptions& opts) {
    ConductorReport rep = certified_report(F, x, opts);
    if (rep.rsw_mod_unsupported)
        throw UnsupportedRangeError(
            "modified refined conductor undefined at p = 2, level 1");
    if (!rep.rsw_mod) {
        if (rep.budget_hit)
            throw ReductionBudgetError("reduction budget exhausted");
        throw OutOfTheoremRangeError(
            "modified refined conductor needs sw' >= 1");
    }
    return *rep.rsw_mod;
}

long critical_slope(const FieldConfig& F, const WittVec& x,
                    const ReduceOptions& opts) {
    ConductorReport rep = certified_report(F, x, opts);
    if (!rep.slope)
        throw OutOfTheoremRangeError("critical slope needs sw' > 1");
    return *rep.slope;
}

long log_critical_slope(const FieldConfig& F, const WittVec& x,
                        const ReduceOptions& opts) {
    ConductorReport rep = certified_report(F, x, opts);
    if (!rep.log_slope)
        throw OutOfTheoremRangeError("log critical slope needs sw >= 1");
    return *rep.log_slope;
}

GradedForm char_point(const FieldConfig& F, const WittVec& x,
                      const ReduceOptions& opts) {
    ConductorReport rep = certified_report(F, x, opts);
    if (rep.rsw_mod_unsupported)
        throw UnsupportedRangeError(
            "characteristic point undefined at p = 2, level 1");
    if (!rep.char_point)
        throw OutOfTheoremRangeError("characteristic point needs sw' > 1");
    return *rep.char_point;
}

GradedForm log_char_point(const FieldConfig& F, const WittVec& x,
                          const ReduceOptions& opts) {
    ConductorReport rep = certified_report(F, x, opts);
    if (!rep.log_char_point)
        throw OutOfTheoremRangeError("log characteristic point needs sw >= 1");
    return *rep.log_char_point;
}

}  // namespace swanlab
