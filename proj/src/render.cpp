#include "swanlab/render.hpp"

namespace swanlab {

namespace {

// atomic: safe to juxtapose with '*' without parentheses
struct Piece {
    std::string s;
    bool atomic;
};

Piece gf_piece(const GaloisField& gf, const GFElem& a) {
    if (gf.is_zero(a)) return {"0", true};
    if (gf.e() == 1) return {std::to_string(a.c[0]), true};
    std::string out;
    int terms = 0;
    for (unsigned i = gf.e(); i-- > 0;) {
        const Coeff c = a.c[i];
        if (c == 0) continue;
        if (terms) out += '+';
        ++terms;
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) {
            out += std::to_string(c);
            out += '*';
        }
        out += 'g';
        if (i > 1) {
            out += '^';
            out += std::to_string(i);
        }
    }
    return {out, terms == 1};
}

Piece poly_piece(const FieldConfig& F, const Poly& a) {
    if (poly_is_zero(a)) return {"0", true};
    std::string out;
    int terms = 0;
    bool bare_sum = false;  // a coefficient sum emitted without parentheses
    for (std::size_t i = a.c.size(); i-- > 0;) {
        const GFElem& c = a.c[i];
        if (F.gf.is_zero(c)) continue;
        if (terms) out += '+';
        ++terms;
        Piece cp = gf_piece(F.gf, c);
        if (i == 0) {
            out += cp.s;
            if (!cp.atomic) bare_sum = true;
            continue;
        }
        const bool is_one = cp.s == "1";
        if (!is_one) {
            if (cp.atomic)
                out += cp.s;
            else
                out += "(" + cp.s + ")";
            out += '*';
        }
        out += 'y';
        if (i > 1) {
            out += '^';
            out += std::to_string(i);
        }
    }
    return {out, terms == 1 && !bare_sum};
}

Piece res_piece(const FieldConfig& F, const ResidueElem& a) {
    Piece num = poly_piece(F, a.num);
    if (poly_deg(a.den) == 0) return num;  // den == 1 by the invariant
    Piece den = poly_piece(F, a.den);
    return {"(" + num.s + ")/(" + den.s + ")", true};
}

void append_power(std::string& out, const char* base, long e) {
    out += base;
    if (e != 1) {
        out += '^';
        out += std::to_string(e);
    }
}

}  // namespace

std::string render_gf(const GaloisField& gf, const GFElem& a) {
    return gf_piece(gf, a).s;
}

std::string render_res(const FieldConfig& F, const ResidueElem& a) {
    return res_piece(F, a).s;
}

std::string render_lau(const FieldConfig& F, const LaurentElem& a) {
    if (lau_is_zero(a)) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : a.terms) {
        if (!first) out += '+';
        first = false;
        Piece c = res_piece(F, t.coeff);
        if (t.exp == 0) {
            out += c.s;
            continue;
        }
        if (c.s != "1") {
            if (c.atomic)
                out += c.s;
            else
                out += "(" + c.s + ")";
            out += '*';
        }
        append_power(out, "pi", t.exp);
    }
    return out;
}

std::vector<std::string> render_witt(const FieldConfig& F, const WittVec& x) {
    std::vector<std::string> out;
    out.reserve(x.size());
    for (const auto& c : x) out.push_back(render_lau(F, c));
    return out;
}

std::string render_witt_inline(const FieldConfig& F, const WittVec& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += "; ";
        out += render_lau(F, x[i]);
    }
    return out + ")";
}

std::string render_local_form(const FieldConfig& F, const LocalForm& w,
                              Basis basis) {
    if (kform_is_zero(w)) return "0";
    std::string out;
    auto part = [&](const LaurentElem& c, const char* sym) {
        if (lau_is_zero(c)) return;
        if (!out.empty()) out += " + ";
        std::string cs = render_lau(F, c);
        if (cs != "1") {
            if (c.terms.size() > 1)
                out += "(" + cs + ")";
            else
                out += cs;
            out += '*';
        }
        out += sym;
    };
    part(w.f, "dy");
    if (basis == Basis::Log) {
        part(w.b, "dlog(pi)");
    } else {
        part(dpi_coefficient(F, w), "dpi");
    }
    return out;
}

std::string render_graded(const FieldConfig& F, const GradedForm& g) {
    std::string inner;
    auto part = [&](const ResidueElem& c, const char* sym) {
        if (res_is_zero(c)) return;
        if (!inner.empty()) inner += " + ";
        Piece cs = res_piece(F, c);
        if (cs.s != "1") {
            if (cs.atomic)
                inner += cs.s;
            else
                inner += "(" + cs.s + ")";
            inner += '*';
        }
        inner += sym;
    };
    part(g.alpha, "dy");
    part(g.beta, g.basis == Basis::Log ? "dlog(pi)" : "dpi");
    if (inner.empty()) inner = "0";
    const long shown = g.basis == Basis::Log ? g.n : g.n + 1;
    return "(" + inner + ") ⊗ pi^(-" + std::to_string(shown) + ")";
}

}  // namespace swanlab
