#ifndef CUBINV_PARSER_HPP
#define CUBINV_PARSER_HPP

#include <cctype>
#include <string>

#include "errors.hpp"
#include "polynomial.hpp"

namespace cubinv {

/// Recursive-descent parser for the form grammar
///
///   expr   := term (('+' | '-') term)*
///   term   := coeff ('*' varpow)* | varpow ('*' varpow)*
///   coeff  := integer | integer '/' positive-integer
///   varpow := var ('^' positive-integer)?
///
/// Variables are the labels of the supplied space; whitespace is
/// insignificant. A leading sign before the first term is accepted.
class FormParser {
public:
    FormParser(std::string text, SpacePtr space)
        : text_(std::move(text)), space_(std::move(space)) {}

    SparsePoly parse() {
        SparsePoly acc(space_);
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = (take() == '-');
        acc += parse_term(negative);
        skip_ws();
        while (pos_ < text_.size()) {
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            take();
            acc += parse_term(op == '-');
            skip_ws();
        }
        return acc;
    }

private:
    SparsePoly parse_term(bool negative) {
        skip_ws();
        Rational coeff(1);
        Exponents exps(space_->arity(), 0);
        bool saw_factor = false;

        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coeff();
            saw_factor = true;
        } else {
            parse_varpow(exps);
            saw_factor = true;
        }
        skip_ws();
        while (pos_ < text_.size() && peek() == '*') {
            take();
            skip_ws();
            parse_varpow(exps);
            skip_ws();
        }
        if (!saw_factor) fail("empty term");
        if (negative) coeff = -coeff;
        return SparsePoly::monomial(space_, std::move(exps), coeff);
    }

    Rational parse_coeff() {
        std::string num = parse_digits("integer");
        skip_ws();
        if (pos_ < text_.size() && peek() == '/') {
            take();
            skip_ws();
            std::string den = parse_digits("positive integer denominator");
            if (den.find_first_not_of('0') == std::string::npos)
                fail("zero denominator");
            return Rational::from_string(num + "/" + den);
        }
        return Rational::from_string(num);
    }

    void parse_varpow(Exponents& exps) {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(peek())))
            fail("expected a variable");
        std::string ident;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(peek())))) {
            ident += take();
        }
        std::size_t var = space_->arity();
        for (std::size_t i = 0; i < space_->arity(); ++i)
            if (space_->labels[i] == ident) { var = i; break; }
        if (var == space_->arity())
            fail_at(start, "unknown variable '" + ident + "'");
        std::int32_t e = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '^') {
            take();
            skip_ws();
            std::string digits = parse_digits("positive integer exponent");
            if (digits.size() > 4) fail("exponent too large");
            e = std::stoi(digits);
            if (e <= 0) fail("exponent must be positive");
        }
        exps[var] += e;
    }

    std::string parse_digits(const std::string& what) {
        skip_ws();
        std::size_t start = pos_;
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek())))
            out += take();
        if (out.empty()) fail_at(start, "expected " + what);
        return out;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
        throw parse_error(at, msg + " at position " + std::to_string(at));
    }

    std::string text_;
    SpacePtr space_;
    std::size_t pos_ = 0;
};

inline SparsePoly parse_form(const std::string& text, SpacePtr space) {
    return FormParser(text, std::move(space)).parse();
}

/// Parses and validates a nonzero homogeneous quaternary cubic.
inline SparsePoly parse_cubic_surface(const std::string& text) {
    SparsePoly f = parse_form(text, primal_quaternary());
    if (f.is_zero()) throw zero_form("the zero form does not define a surface");
    if (!f.is_homogeneous() || f.total_degree() != 3)
        throw invalid_form("expected a homogeneous cubic in x, y, z, w");
    return f;
}

} // namespace cubinv

#endif
