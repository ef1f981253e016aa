#include "logtoric/parser.hpp"

#include <cctype>
#include <sstream>

namespace logtoric {

namespace {

Rat rat_power(const Rat& base, const Int& k) {
    Rat out(1);
    Int n = k < 0 ? Int(-k) : k;
    for (Int i(0); i < n; ++i) {
        out *= base;
    }
    if (k < 0) {
        out = 1 / out;
    }
    return out;
}

class PolyParser {
  public:
    PolyParser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    LaurentPolynomial parse() {
        LaurentPolynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'",
                             pos_);
        }
        return p;
    }

  private:
    const std::string& text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
    std::size_t last_consumed_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek() const { return text_[pos_]; }

    char take() {
        last_consumed_ = pos_;
        return text_[pos_++];
    }

    [[noreturn]] void fail_eof(const std::string& what) {
        throw ParseError("unexpected end of input, expected " + what, last_consumed_);
    }

    Int take_integer(const std::string& what) {
        if (at_end()) {
            fail_eof(what);
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("expected " + what, pos_);
        }
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits.push_back(take());
        }
        return Int(digits);
    }

    LaurentPolynomial parse_expr() {
        LaurentPolynomial acc = parse_term();
        while (!at_end()) {
            char c = peek();
            if (c == '+') {
                take();
                acc = acc + parse_term();
            } else if (c == '-') {
                take();
                acc = acc - parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    LaurentPolynomial parse_term() {
        LaurentPolynomial acc = parse_factor();
        while (!at_end() && peek() == '*') {
            take();
            acc = acc * parse_factor();
        }
        return acc;
    }

    LaurentPolynomial parse_factor() {
        LaurentPolynomial base = parse_base();
        if (at_end() || peek() != '^') {
            return base;
        }
        std::size_t caret = pos_;
        take();
        Int k = parse_exponent();
        if (base.term_count() == 1) {
            const auto& [expo, coeff] = *base.terms().begin();
            return LaurentPolynomial::monomial(k * expo, rat_power(coeff, k));
        }
        if (k < 0) {
            throw ParseError("negative exponent requires a one-term base", caret);
        }
        if (!k.fits_ulong_p() || k > 1000) {
            throw ParseError("exponent too large", caret);
        }
        return base.pow(static_cast<unsigned>(k.get_ui()));
    }

    Int parse_exponent() {
        if (at_end()) {
            fail_eof("an exponent");
        }
        bool parenthesized = false;
        if (peek() == '(') {
            take();
            parenthesized = true;
            if (at_end()) {
                fail_eof("an exponent");
            }
        }
        bool negative = false;
        if (peek() == '-') {
            take();
            negative = true;
            if (at_end()) {
                fail_eof("an exponent");
            }
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("non-integer exponent", pos_);
        }
        Int value = take_integer("an exponent");
        if (pos_ < text_.size() && text_[pos_] == '.') {
            throw ParseError("non-integer exponent", pos_);
        }
        if (negative) {
            value = -value;
        }
        if (parenthesized) {
            if (at_end()) {
                throw ParseError("unbalanced parentheses", last_consumed_);
            }
            if (peek() != ')') {
                throw ParseError("non-integer exponent", pos_);
            }
            take();
        }
        return value;
    }

    LaurentPolynomial parse_base() {
        if (at_end()) {
            fail_eof("a value");
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int value = take_integer("an integer");
            if (pos_ < text_.size() && text_[pos_] == '.') {
                throw ParseError("non-integer coefficient", pos_);
            }
            return LaurentPolynomial::monomial(IntVec(vars_.size()), Rat(value));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                name.push_back(take());
            }
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (vars_[i] == name) {
                    IntVec e(vars_.size());
                    e[i] = 1;
                    return LaurentPolynomial::monomial(e);
                }
            }
            throw ParseError("unknown symbol '" + name + "'", start);
        }
        if (c == '(') {
            take();
            LaurentPolynomial inner = parse_expr();
            if (at_end()) {
                throw ParseError("unbalanced parentheses", last_consumed_);
            }
            if (peek() != ')') {
                throw ParseError("expected ')'", pos_);
            }
            take();
            return inner;
        }
        if (c == '-') {
            take();
            return -parse_factor();
        }
        if (c == ')') {
            throw ParseError("unbalanced parentheses", pos_);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }
};

}  // namespace

LaurentPolynomial parse_polynomial(const std::string& text,
                                   const std::vector<std::string>& var_names) {
    return PolyParser(text, var_names).parse();
}

std::string polynomial_str(const LaurentPolynomial& p,
                           const std::vector<std::string>& var_names) {
    if (p.rank() != var_names.size()) {
        throw MathError("variable names and lattice rank differ");
    }
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [expo, coeff] : p.terms()) {
        Rat magnitude = coeff < 0 ? Rat(-coeff) : coeff;
        if (first) {
            if (coeff < 0) {
                out << "-";
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < expo.size(); ++i) {
            if (expo[i] == 0) {
                continue;
            }
            std::string f = var_names[i];
            if (expo[i] != 1) {
                f += "^";
                if (expo[i] < 0) {
                    f += "(" + expo[i].get_str() + ")";
                } else {
                    f += expo[i].get_str();
                }
            }
            factors.push_back(f);
        }
        if (factors.empty()) {
            out << magnitude.get_str();
            continue;
        }
        std::string head;
        if (magnitude != 1) {
            head = magnitude.get_str() + "*";
        }
        out << head;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) {
                out << "*";
            }
            out << factors[i];
        }
    }
    return out.str();
}

}  // namespace logtoric
