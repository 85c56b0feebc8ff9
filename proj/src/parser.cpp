#include "swanlab/parser.hpp"

#include <cctype>

#include "swanlab/errors.hpp"

namespace swanlab {

namespace {

class Parser {
  public:
    Parser(const std::string& src, const FieldConfig& F) : src_(src), F_(F) {}

    LaurentElem run() {
        LaurentElem v = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(pos_, what);
    }

    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected an integer");
        if (pos_ - start > 9) fail("integer literal too long");
        return std::stol(src_.substr(start, pos_ - start));
    }

    LaurentElem expr() {
        bool neg = eat('-');
        LaurentElem v = term();
        if (neg) v = lau_neg(F_, v);
        for (;;) {
            if (eat('+')) {
                v = lau_add(F_, v, term());
            } else if (eat('-')) {
                v = lau_sub(F_, v, term());
            } else {
                return v;
            }
        }
    }

    LaurentElem term() {
        LaurentElem v = factor();
        for (;;) {
            if (eat('*')) {
                v = lau_mul(F_, v, factor());
            } else if (eat('/')) {
                std::size_t at = pos_;
                LaurentElem d = factor();
                if (lau_is_zero(d))
                    throw DivisionByZeroError("division by zero in expression");
                v = lau_mul(F_, v, invert(d, at));
            } else {
                return v;
            }
        }
    }

    LaurentElem invert(const LaurentElem& d, std::size_t at) {
        if (!lau_is_unit_monomial(d))
            throw ParseError(at, "divisor is not an invertible monomial");
        return lau_inv(F_, d);
    }

    LaurentElem factor() {
        LaurentElem v = atom();
        if (!eat('^')) return v;
        std::size_t at = pos_;
        bool neg = eat('-');
        long e = integer();
        if (!neg) return lau_pow(F_, v, static_cast<unsigned long long>(e));
        if (lau_is_zero(v))
            throw DivisionByZeroError("zero raised to a negative power");
        if (!lau_is_unit_monomial(v))
            throw ParseError(at, "negative exponent on a non-invertible base");
        return lau_pow(F_, lau_inv(F_, v), static_cast<unsigned long long>(e));
    }

    LaurentElem atom() {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return lau_from_res(F_, res_from_int(F_, integer()));
        if (c == 'y') {
            if (!F_.has_y())
                fail("'y' is not defined over a perfect residue field");
            ++pos_;
            return lau_from_res(F_, res_y(F_));
        }
        if (c == 'p') {
            if (src_.compare(pos_, 2, "pi") != 0) fail("expected 'pi'");
            pos_ += 2;
            return lau_term(F_, res_one(F_), 1);
        }
        if (c == 'g') {
            ++pos_;
            return lau_from_res(F_, res_from_gf(F_, F_.gf.gen()));
        }
        if (c == '(') {
            ++pos_;
            LaurentElem v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        fail("expected an integer, 'y', 'pi', 'g' or '('");
    }

    const std::string& src_;
    const FieldConfig& F_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentElem parse_element(const std::string& src, const FieldConfig& F) {
    return Parser(src, F).run();
}

ResidueElem parse_residue_element(const std::string& src,
                                  const FieldConfig& F) {
    LaurentElem v = parse_element(src, F);
    if (lau_is_zero(v)) return res_zero(F);
    if (v.terms.size() != 1 || v.terms[0].exp != 0)
        throw ParseError(src.size(), "expected an element of the residue field");
    return v.terms[0].coeff;
}

}  // namespace swanlab
