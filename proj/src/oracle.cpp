#include "swanlab/oracle.hpp"

#include <deque>
#include <random>
#include <unordered_set>

#include "swanlab/render.hpp"

namespace swanlab {

namespace {

long pow_long(long b, unsigned e) {
    long r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<ResidueElem> search_coefficients(const FieldConfig& F,
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

}  // namespace

BruteOutcome brute_reduce(const FieldConfig& F, const WittVec& x,
                          long exp_bound, unsigned depth,
                          unsigned long budget) {
    const Coeff p = F.p();
    const unsigned m = static_cast<unsigned>(x.size()) - 1;
    BruteOutcome best{x, witt_level(p, x), 0};

    std::deque<WittVec> frontier{x};
    std::unordered_set<std::string> seen{render_witt_inline(F, x)};

    for (unsigned d = 0; d < depth; ++d) {
        std::deque<WittVec> next;
        for (const auto& state : frontier) {
            auto coeffs = search_coefficients(F, state);
            for (unsigned i = 0; i <= m; ++i) {
                for (long j = -exp_bound; j <= 0; ++j) {
                    const unsigned kmax = F.has_y() ? p - 1 : 0;
                    for (unsigned k = 0; k <= kmax; ++k) {
                        for (const auto& c : coeffs) {
                            if (best.explored++ >= budget) return best;
                            ResidueElem cc = c;
                            if (k > 0)
                                cc = res_mul(
                                    F, cc,
                                    res_pow(F, res_y(F), static_cast<long>(k)));
                            WittVec move = witt_zero(m);
                            move[i] = lau_term(F, cc, j);
                            WittVec z =
                                witt_add(F, state, frobenius_minus_one(F, move));
                            if (!seen.insert(render_witt_inline(F, z)).second)
                                continue;
                            const long lvl = witt_level(p, z);
                            if (lvl < best.bound) {
                                best.bound = lvl;
                                best.rep = z;
                                if (lvl == 0) return best;
                            }
                            next.push_back(z);
                        }
                    }
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return best;
}

namespace {

// GF(p)[t]/(t^k) with dense coefficient vectors.
struct TruncRing {
    Coeff p;
    unsigned k;
    using Elem = std::vector<Coeff>;
    Elem zero() const { return Elem(k, 0); }
    Elem one() const {
        Elem e(k, 0);
        e[0] = 1;
        return e;
    }
    Elem from_int(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += p;
        Elem e(k, 0);
        e[0] = static_cast<Coeff>(r);
        return e;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem e(k, 0);
        for (unsigned i = 0; i < k; ++i) e[i] = (a[i] + b[i]) % p;
        return e;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem e(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            if (a[i] == 0) continue;
            for (unsigned j = 0; i + j < k; ++j)
                e[i + j] = (e[i + j] + a[i] * b[j]) % p;
        }
        return e;
    }
    bool is_zero(const Elem& a) const {
        for (auto c : a)
            if (c) return false;
        return true;
    }
};

std::string trunc_str(const TruncRing::Elem& a) {
    std::string s;
    for (auto c : a) s += std::to_string(c);
    return s;
}

}  // namespace

TrialReport verify_q_identity(Coeff p, unsigned m, unsigned k,
                              unsigned long trials, std::uint64_t seed) {
    const WittContext& ctx = WittContext::get(p, m);
    TruncRing R{p, k};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Coeff> pick(0, p - 1);

    TrialReport rep;
    for (unsigned long t = 0; t < trials; ++t) {
        ++rep.trials;
        std::vector<TruncRing::Elem> x, y, xp;
        for (unsigned i = 0; i <= m; ++i) {
            TruncRing::Elem xi(k), yi(k);
            for (unsigned c = 0; c < k; ++c) xi[c] = pick(rng);
            for (unsigned c = 0; c < k; ++c) yi[c] = pick(rng);
            x.push_back(xi);
            y.push_back(yi);
            xp.push_back(R.mul(xi, R.add(R.one(), yi)));
        }
        auto lhs = witt_add_generic(ctx, R, xp, witt_neg_generic(ctx, R, x));
        auto rhs = rescale_difference_generic(ctx, R, x, y);
        if (lhs != rhs) {
            ++rep.failures;
            if (rep.first_failure.empty()) {
                std::string w = "x=";
                for (auto& e : x) w += trunc_str(e) + ",";
                w += " y=";
                for (auto& e : y) w += trunc_str(e) + ",";
                rep.first_failure = w;
            }
        }
    }
    return rep;
}

namespace {

ResidueElem random_res(const FieldConfig& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(F.p()) - 1);
    Poly num;
    const int deg = F.has_y() ? static_cast<int>(rng() % 3) : 0;
    for (int i = 0; i <= deg; ++i) {
        GFElem c = F.gf.zero();
        for (unsigned d = 0; d < F.gf.e(); ++d)
            c.c[d] = static_cast<Coeff>(pick(rng));
        num.c.push_back(c);
    }
    poly_trim(F, num);
    Poly den = poly_const(F, F.gf.one());
    if (F.has_y() && rng() % 4 == 0) {
        den = poly_y(F);
        den = poly_add(F, den, poly_const(F, F.gf.from_int(1 + rng() % 2)));
    }
    return res_make(F, std::move(num), std::move(den));
}

LaurentElem random_lau_in_box(const FieldConfig& F, std::mt19937_64& rng,
                              long min_exp) {
    LaurentElem out = lau_zero();
    const unsigned terms = 1 + rng() % 2;
    for (unsigned t = 0; t < terms; ++t) {
        long span = 1 - min_exp;
        long e = min_exp + static_cast<long>(rng() % static_cast<unsigned long>(
                                                 span > 0 ? span : 1));
        out = lau_add(F, out, lau_term(F, random_res(F, rng), e));
    }
    return out;
}

WittVec random_filtration_member(const FieldConfig& F, std::mt19937_64& rng,
                                 unsigned m, long n) {
    WittVec x = witt_zero(m);
    for (unsigned i = 0; i <= m; ++i) {
        const long w = pow_long(static_cast<long>(F.p()), m - i);
        x[i] = random_lau_in_box(F, rng, -(n / w));
    }
    return x;
}

}  // namespace

TrialReport fil_prime_generator_sample(const FieldConfig& F, unsigned m,
                                       long n, unsigned long trials,
                                       std::uint64_t seed) {
    const Coeff p = F.p();
    const unsigned mp =
        std::min<unsigned>(ord_p(p, static_cast<unsigned long>(n) + 1), m + 1);
    std::mt19937_64 rng(seed);
    TrialReport rep;

    auto vpow = [&](WittVec w) {
        for (unsigned t = 0; t < m + 1 - mp; ++t) w = verschiebung(w);
        return w;
    };

    for (unsigned long t = 0; t < trials; ++t) {
        ++rep.trials;
        // generators -> componentwise test
        WittVec u = random_filtration_member(F, rng, m, n);
        WittVec z = u;
        if (mp > 0) {
            WittVec w = random_filtration_member(F, rng, mp - 1, n + 1);
            z = witt_add(F, u, vpow(w));
        }
        if (!fil_prime_membership(p, z, n)) {
            ++rep.failures;
            if (rep.first_failure.empty())
                rep.first_failure =
                    "generator sample left fil': " + render_witt_inline(F, z);
            continue;
        }

        // componentwise member -> generator decomposition
        WittVec zc = witt_zero(m);
        for (unsigned i = 0; i <= m; ++i) {
            const long w = pow_long(static_cast<long>(p), m - i);
            const long bound = (i + mp >= m + 1) ? n + 1 : n;
            zc[i] = random_lau_in_box(F, rng, -(bound / w));
        }
        if (mp == 0) continue;  // fil'_n = fil_n, nothing to decompose
        WittVec acc = witt_zero(mp - 1);
        WittVec rem = zc;
        bool done = false;
        for (int round = 0; round < 64; ++round) {
            if (fil_membership(p, rem, n)) {
                done = true;
                break;
            }
            WittVec b = witt_zero(mp - 1);
            bool nonzero = false;
            for (unsigned i = m + 1 - mp; i <= m; ++i) {
                const long w = pow_long(static_cast<long>(p), m - i);
                // terms of depth exactly n+1 must come from the V-part
                for (const auto& term : rem[i].terms)
                    if (w * -term.exp > n) {
                        b[i - (m + 1 - mp)] = lau_add(
                            F, b[i - (m + 1 - mp)],
                            lau_term(F, term.coeff, term.exp));
                        nonzero = true;
                    }
            }
            if (!nonzero) break;
            acc = witt_add(F, acc, b);
            rem = witt_sub(F, zc, vpow(acc));
        }
        if (!done || !fil_membership(p, acc, n + 1)) {
            ++rep.failures;
            if (rep.first_failure.empty())
                rep.first_failure = "no generator decomposition found for " +
                                    render_witt_inline(F, zc);
        }
    }
    return rep;
}

}  // namespace swanlab
