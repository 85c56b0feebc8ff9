#include "swanlab/witt.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace swanlab {

namespace {

std::uint64_t mono_key(const Monomial& m) {
    std::uint64_t k = 0;
    for (int i = 7; i >= 0; --i) k = (k << 8) | m.exp[static_cast<std::size_t>(i)];
    return k;
}

Monomial mono_from_key(std::uint64_t k) {
    Monomial m;
    for (std::size_t i = 0; i < 8; ++i) {
        m.exp[i] = static_cast<std::uint8_t>(k & 0xff);
        k >>= 8;
    }
    return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < 8; ++i) {
        const unsigned s = static_cast<unsigned>(a.exp[i]) + b.exp[i];
        if (s > 0xff) throw IntegralityError("monomial exponent overflow");
        r.exp[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

void normalize(UnivPoly& P) {
    std::sort(P.terms.begin(), P.terms.end(),
              [](const auto& a, const auto& b) {
                  return mono_key(a.first) < mono_key(b.first);
              });
    std::vector<std::pair<Monomial, BigInt>> out;
    out.reserve(P.terms.size());
    for (auto& t : P.terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& t) { return t.second == 0; }),
              out.end());
    P.terms = std::move(out);
}

UnivPoly up_zero(unsigned nvars) { return UnivPoly{nvars, {}}; }

UnivPoly up_monomial(unsigned nvars, const Monomial& m, BigInt c) {
    UnivPoly P{nvars, {}};
    if (c != 0) P.terms.push_back({m, std::move(c)});
    return P;
}

UnivPoly up_var_pow(unsigned nvars, unsigned var, unsigned e, BigInt c = 1) {
    Monomial m;
    if (e > 0xff) throw IntegralityError("monomial exponent overflow");
    m.exp[var] = static_cast<std::uint8_t>(e);
    return up_monomial(nvars, m, std::move(c));
}

UnivPoly up_add(const UnivPoly& a, const UnivPoly& b) {
    UnivPoly r{a.nvars, {}};
    r.terms.reserve(a.terms.size() + b.terms.size());
    r.terms.insert(r.terms.end(), a.terms.begin(), a.terms.end());
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    normalize(r);
    return r;
}

UnivPoly up_scale(const UnivPoly& a, const BigInt& c) {
    UnivPoly r{a.nvars, {}};
    if (c == 0) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({t.first, t.second * c});
    return r;
}

UnivPoly up_sub(const UnivPoly& a, const UnivPoly& b) {
    return up_add(a, up_scale(b, -1));
}

UnivPoly up_mul(const UnivPoly& a, const UnivPoly& b) {
    UnivPoly r{a.nvars, {}};
    if (a.terms.empty() || b.terms.empty()) return r;
    std::unordered_map<std::uint64_t, BigInt> acc;
    acc.reserve(a.terms.size() * 2);
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            const Monomial m = mono_mul(ta.first, tb.first);
            acc[mono_key(m)] += ta.second * tb.second;
        }
    r.terms.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (c != 0) r.terms.push_back({mono_from_key(k), std::move(c)});
    normalize(r);
    return r;
}

UnivPoly up_pow(const UnivPoly& a, unsigned e) {
    UnivPoly acc = up_monomial(a.nvars, Monomial{}, 1);
    UnivPoly base = a;
    while (e) {
        if (e & 1) acc = up_mul(acc, base);
        base = e > 1 ? up_mul(base, base) : base;
        e >>= 1;
    }
    return acc;
}

UnivPoly up_exact_div(const UnivPoly& a, const BigInt& d, const char* what) {
    UnivPoly r{a.nvars, {}};
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) {
        if (t.second % d != 0)
            throw IntegralityError(std::string("inexact division by p-power in ") +
                                   what);
        r.terms.push_back({t.first, t.second / d});
    }
    return r;
}

ModPoly reduce_mod_p(const UnivPoly& a, Coeff p) {
    ModPoly r{a.nvars, {}};
    for (const auto& t : a.terms) {
        BigInt c = t.second % p;
        if (c < 0) c += p;
        if (c != 0)
            r.terms.push_back({t.first, static_cast<Coeff>(c)});
    }
    return r;
}

BigInt pow_bigint(BigInt base, unsigned e) {
    BigInt acc = 1;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

unsigned upow(Coeff p, unsigned e) {
    unsigned r = 1;
    while (e--) r *= p;
    return r;
}

// Sum over i <= n of p^i X_i^(p^(n-i)), with X starting at variable base.
UnivPoly ghost_component(unsigned nvars, Coeff p, unsigned n, unsigned base) {
    UnivPoly g = up_zero(nvars);
    for (unsigned i = 0; i <= n; ++i)
        g = up_add(g, up_var_pow(nvars, base + i, upow(p, n - i),
                                 pow_bigint(p, i)));
    return g;
}

}  // namespace

bool witt_prime_supported(Coeff p) { return p == 2 || p == 3 || p == 5; }

WittContext::WittContext(Coeff p, unsigned m) : p_(p), m_(m) {}

void WittContext::build() {
    const unsigned n1 = m_ + 1;
    const unsigned nv2 = 2 * n1;
    sum_int_.clear();
    neg_int_.clear();
    q_int_.clear();
    for (unsigned n = 0; n <= m_; ++n) {
        // sum: p^n S_n = ghost_n(X) + ghost_n(Y) - sum_{i<n} p^i S_i^(p^(n-i))
        {
            UnivPoly T = up_add(ghost_component(nv2, p_, n, 0),
                                ghost_component(nv2, p_, n, n1));
            for (unsigned i = 0; i < n; ++i)
                T = up_sub(T, up_scale(up_pow(sum_int_[i], upow(p_, n - i)),
                                       pow_bigint(p_, i)));
            sum_int_.push_back(up_exact_div(T, pow_bigint(p_, n), "sum"));
        }
        // negation: p^n N_n = -ghost_n(X) - sum_{i<n} p^i N_i^(p^(n-i))
        {
            UnivPoly T = up_scale(ghost_component(n1, p_, n, 0), -1);
            for (unsigned i = 0; i < n; ++i)
                T = up_sub(T, up_scale(up_pow(neg_int_[i], upow(p_, n - i)),
                                       pow_bigint(p_, i)));
            neg_int_.push_back(up_exact_div(T, pow_bigint(p_, n), "negation"));
        }
        // rescale difference: p^n Q_n =
        //   sum_{i<=n} p^i X_i^(p^(n-i)) ((1+Y_i)^(p^(n-i)) - 1)
        //   - sum_{i<n} p^i Q_i^(p^(n-i))
        {
            UnivPoly T = up_zero(nv2);
            for (unsigned i = 0; i <= n; ++i) {
                const unsigned e = upow(p_, n - i);
                UnivPoly onep = up_add(up_monomial(nv2, Monomial{}, 1),
                                       up_var_pow(nv2, n1 + i, 1));
                UnivPoly bracket =
                    up_sub(up_pow(onep, e), up_monomial(nv2, Monomial{}, 1));
                UnivPoly term = up_mul(up_var_pow(nv2, i, e), bracket);
                T = up_add(T, up_scale(term, pow_bigint(p_, i)));
            }
            for (unsigned i = 0; i < n; ++i)
                T = up_sub(T, up_scale(up_pow(q_int_[i], upow(p_, n - i)),
                                       pow_bigint(p_, i)));
            q_int_.push_back(up_exact_div(T, pow_bigint(p_, n), "rescale"));
        }
    }
    sum_mod_.clear();
    neg_mod_.clear();
    q_mod_.clear();
    for (const auto& P : sum_int_) sum_mod_.push_back(reduce_mod_p(P, p_));
    for (const auto& P : neg_int_) neg_mod_.push_back(reduce_mod_p(P, p_));
    for (const auto& P : q_int_) q_mod_.push_back(reduce_mod_p(P, p_));
}

const std::vector<UnivPoly>& WittContext::product_polys_int() const {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (mul_int_.empty()) {
        const unsigned n1 = m_ + 1;
        const unsigned nv2 = 2 * n1;
        std::vector<UnivPoly> out;
        for (unsigned n = 0; n <= m_; ++n) {
            UnivPoly T = up_mul(ghost_component(nv2, p_, n, 0),
                                ghost_component(nv2, p_, n, n1));
            for (unsigned i = 0; i < n; ++i)
                T = up_sub(T, up_scale(up_pow(out[i], upow(p_, n - i)),
                                       pow_bigint(p_, i)));
            out.push_back(up_exact_div(T, pow_bigint(p_, n), "product"));
        }
        mul_int_ = std::move(out);
        mul_mod_.clear();
        for (const auto& P : mul_int_) mul_mod_.push_back(reduce_mod_p(P, p_));
    }
    return mul_int_;
}

const std::vector<ModPoly>& WittContext::product_polys() const {
    product_polys_int();
    return mul_mod_;
}

// --- optional on-disk cache ------------------------------------------------
//
// Exact integer encoding, one term per line. Advisory: on any structural
// mismatch the context is rebuilt from scratch and the file rewritten.

namespace {

const char* kCacheSchema = "swanlab-poly-cache/1";

std::filesystem::path cache_path(Coeff p, unsigned m) {
    const char* dir = std::getenv("SWANLAB_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::filesystem::path(dir) /
           ("witt-p" + std::to_string(p) + "-m" + std::to_string(m) + ".cache");
}

void write_poly_list(std::ostream& os, const char* tag,
                     const std::vector<UnivPoly>& Ps) {
    for (std::size_t i = 0; i < Ps.size(); ++i) {
        os << tag << ' ' << i << ' ' << Ps[i].nvars << ' ' << Ps[i].terms.size()
           << '\n';
        for (const auto& [mono, coeff] : Ps[i].terms) {
            os << mono_key(mono) << ' ' << coeff << '\n';
        }
    }
}

bool read_poly_list(std::istream& is, const char* tag, unsigned count,
                    std::vector<UnivPoly>& out) {
    out.clear();
    for (unsigned i = 0; i < count; ++i) {
        std::string t;
        std::size_t idx, nvars, nterms;
        if (!(is >> t >> idx >> nvars >> nterms) || t != tag || idx != i)
            return false;
        UnivPoly P{static_cast<unsigned>(nvars), {}};
        for (std::size_t j = 0; j < nterms; ++j) {
            std::uint64_t key;
            BigInt c;
            if (!(is >> key >> c)) return false;
            P.terms.push_back({mono_from_key(key), std::move(c)});
        }
        out.push_back(std::move(P));
    }
    return true;
}

// Isobaric check: with component i carrying weight p^i, every monomial of
// the n-th structure polynomial has total weight exactly p^n. For the
// rescale polynomials the second operand's variables carry weight zero.
bool isobaric(const UnivPoly& P, Coeff p, unsigned n, unsigned n1,
              bool second_weightless) {
    const unsigned long target = upow(p, n);
    for (const auto& [mono, coeff] : P.terms) {
        unsigned long w = 0;
        for (unsigned v = 0; v < P.nvars; ++v) {
            if (mono.exp[v] == 0) continue;
            const unsigned i = v < n1 ? v : v - n1;
            const bool weightless = second_weightless && v >= n1;
            if (!weightless) w += static_cast<unsigned long>(mono.exp[v]) * upow(p, i);
        }
        if (w != target) return false;
    }
    return true;
}

}  // namespace

bool WittContext::validate_loaded() const {
    const unsigned n1 = m_ + 1;
    if (sum_int_.size() != n1 || neg_int_.size() != n1 || q_int_.size() != n1)
        return false;
    for (unsigned n = 0; n <= m_; ++n) {
        if (!isobaric(sum_int_[n], p_, n, n1, false)) return false;
        if (!isobaric(neg_int_[n], p_, n, n1, false)) return false;
        if (!isobaric(q_int_[n], p_, n, n1, true)) return false;
        // sum with second operand zero must be the identity
        for (const auto& [mono, coeff] : sum_int_[n].terms) {
            bool pure_x = true;
            for (unsigned v = n1; v < 2 * n1; ++v)
                if (mono.exp[v] != 0) pure_x = false;
            if (pure_x) {
                Monomial expect{};
                expect.exp[n] = 1;
                if (!(mono == expect) || coeff != 1) return false;
            }
        }
        // every rescale monomial involves the second operand
        for (const auto& [mono, coeff] : q_int_[n].terms) {
            bool has_y = false;
            for (unsigned v = n1; v < 2 * n1; ++v)
                if (mono.exp[v] != 0) has_y = true;
            if (!has_y) return false;
        }
    }
    return true;
}

bool WittContext::load_from_cache() {
    const auto path = cache_path(p_, m_);
    if (path.empty()) return false;
    std::ifstream is(path);
    if (!is) return false;
    std::string schema;
    Coeff p;
    unsigned m;
    if (!(is >> schema >> p >> m) || schema != kCacheSchema || p != p_ || m != m_)
        return false;
    if (!read_poly_list(is, "S", m_ + 1, sum_int_)) return false;
    if (!read_poly_list(is, "N", m_ + 1, neg_int_)) return false;
    if (!read_poly_list(is, "Q", m_ + 1, q_int_)) return false;
    if (!validate_loaded()) return false;
    sum_mod_.clear();
    neg_mod_.clear();
    q_mod_.clear();
    for (const auto& P : sum_int_) sum_mod_.push_back(reduce_mod_p(P, p_));
    for (const auto& P : neg_int_) neg_mod_.push_back(reduce_mod_p(P, p_));
    for (const auto& P : q_int_) q_mod_.push_back(reduce_mod_p(P, p_));
    return true;
}

void WittContext::store_to_cache() const {
    const auto path = cache_path(p_, m_);
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream os(path);
    if (!os) return;
    os << kCacheSchema << ' ' << p_ << ' ' << m_ << '\n';
    write_poly_list(os, "S", sum_int_);
    write_poly_list(os, "N", neg_int_);
    write_poly_list(os, "Q", q_int_);
}

const WittContext& WittContext::get(Coeff p, unsigned m) {
    if (!witt_prime_supported(p))
        throw ContextLimitError("Witt contexts support p in {2, 3, 5}");
    if (m + 1 > kMaxWittLength)
        throw ContextLimitError("Witt length beyond supported envelope (" +
                                std::to_string(kMaxWittLength) + ")");
    static std::mutex mu;
    static std::map<std::pair<Coeff, unsigned>, std::unique_ptr<WittContext>> pool;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = pool[{p, m}];
    if (!slot) {
        slot.reset(new WittContext(p, m));
        if (!slot->load_from_cache()) {
            slot->build();
            slot->store_to_cache();
        }
    }
    return *slot;
}

// --- Witt vectors over K ---------------------------------------------------

WittVec witt_zero(unsigned m) { return WittVec(m + 1); }

namespace {
unsigned vec_m(const WittVec& a) {
    return static_cast<unsigned>(a.size()) - 1;
}
}  // namespace

WittVec witt_add(const FieldConfig& F, const WittVec& a, const WittVec& b) {
    const auto& ctx = WittContext::get(F.p(), vec_m(a));
    LaurentRing R{&F};
    return witt_add_generic(ctx, R, a, b);
}

WittVec witt_neg(const FieldConfig& F, const WittVec& a) {
    const auto& ctx = WittContext::get(F.p(), vec_m(a));
    LaurentRing R{&F};
    return witt_neg_generic(ctx, R, a);
}

WittVec witt_sub(const FieldConfig& F, const WittVec& a, const WittVec& b) {
    return witt_add(F, a, witt_neg(F, b));
}

WittVec witt_mul(const FieldConfig& F, const WittVec& a, const WittVec& b) {
    const auto& ctx = WittContext::get(F.p(), vec_m(a));
    LaurentRing R{&F};
    return witt_mul_generic(ctx, R, a, b);
}

WittVec witt_frobenius(const FieldConfig& F, const WittVec& a) {
    WittVec r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(lau_frobenius(F, x));
    return r;
}

WittVec verschiebung(const WittVec& a) {
    WittVec r;
    r.reserve(a.size() + 1);
    r.push_back(lau_zero());
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

WittVec witt_scalar(const FieldConfig& F, const WittVec& a, unsigned long u) {
    WittVec acc = witt_zero(vec_m(a));
    WittVec base = a;
    while (u) {
        if (u & 1) acc = witt_add(F, acc, base);
        u >>= 1;
        if (u) base = witt_add(F, base, base);
    }
    return acc;
}

WittVec rescale_difference(const FieldConfig& F, const WittVec& x,
                           const WittVec& y) {
    const auto& ctx = WittContext::get(F.p(), vec_m(x));
    LaurentRing R{&F};
    return rescale_difference_generic(ctx, R, x, y);
}

WittVec frobenius_minus_one(const FieldConfig& F, const WittVec& y) {
    return witt_sub(F, witt_frobenius(F, y), y);
}

// --- filtrations -----------------------------------------------------------

unsigned ord_p(Coeff p, unsigned long n) {
    unsigned r = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++r;
    }
    return r;
}

long witt_level(Coeff p, const WittVec& x) {
    const unsigned m = vec_m(x);
    long level = 0;
    long w = 1;  // p^(m-i), starting at i = m
    for (unsigned back = 0; back <= m; ++back) {
        const Valuation v = lau_valuation(x[m - back]);
        if (v.finite) level = std::max(level, -w * v.v);
        w *= static_cast<long>(p);
    }
    return level;
}

bool fil_membership(Coeff p, const WittVec& x, long n) {
    return n >= 0 && witt_level(p, x) <= n;
}

bool fil_prime_membership(Coeff p, const WittVec& x, long n) {
    if (n < 0) return false;
    const unsigned m = vec_m(x);
    const unsigned mp = std::min<unsigned>(ord_p(p, static_cast<unsigned long>(n) + 1),
                                           m + 1);
    long w = 1;
    std::vector<long> weight(m + 1);
    for (unsigned back = 0; back <= m; ++back) {
        weight[m - back] = w;
        w *= static_cast<long>(p);
    }
    for (unsigned i = 0; i <= m; ++i) {
        const Valuation v = lau_valuation(x[i]);
        if (!v.finite) continue;
        const long bound = (i + mp >= m + 1) ? n + 1 : n;
        if (-weight[i] * v.v > bound) return false;
    }
    return true;
}

}  // namespace swanlab
