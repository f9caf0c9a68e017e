#ifndef PVI_PARSER_HPP
#define PVI_PARSER_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "pvi/poly.hpp"

namespace pvi {

namespace detail {

/// Recursive-descent parser for polynomial expressions:
///   expr   := term (('+'|'-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := primary ('^' uint)?
///   primary:= uint ('/' uint)? | 'x' | 'sqrt' '(' uint ')' | '(' expr ')'
/// Whitespace is insignificant.  '/' appears only inside p/q literals;
/// 'sqrt' is legal only when parsing over a quadratic field, and its
/// argument must match that field's base.
template <scalar_field K>
class PolyParser {
public:
    PolyParser(std::string_view text, long long surd_base)
        : s_(text), surd_base_(surd_base) {}

    Poly<K> run() {
        skip_ws();
        Poly<K> p = parse_expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    using P = Poly<K>;

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat(char c) {
        if (!peek_is(c))
            return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!eat(c))
            fail(std::string("expected '") + c + "'");
    }

    P parse_expr() {
        P acc = parse_term();
        for (;;) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    P parse_term() {
        P acc = parse_unary();
        while (eat('*'))
            acc *= parse_unary();
        return acc;
    }

    P parse_unary() {
        if (eat('-'))
            return -parse_unary();
        return parse_power();
    }

    P parse_power() {
        P base = parse_primary();
        if (!eat('^'))
            return base;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '-')
            fail("negative exponent");
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a nonnegative integer exponent");
        BigInt e = parse_uint();
        if (e > 100000)
            fail("exponent too large");
        return base.pow(static_cast<unsigned long>(e));
    }

    P parse_primary() {
        skip_ws();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return P(scalar_from_rational<K>(parse_rational()));
        if (c == '(') {
            ++pos_;
            P inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            return parse_name();
        fail(std::string("unexpected character '") + c + "'");
    }

    P parse_name() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        std::string_view name = s_.substr(start, pos_ - start);
        if (name == "x")
            return P::variable();
        if (name == "sqrt") {
            if constexpr (std::same_as<K, QuadScalar>) {
                expect('(');
                skip_ws();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    fail("expected an integer under sqrt");
                BigInt d = parse_uint();
                expect(')');
                if (d != surd_base_) {
                    pos_ = start;
                    fail("sqrt(" + d.str() + ") does not match the field Q(sqrt(" +
                         std::to_string(surd_base_) + "))");
                }
                return P(QuadScalar::root_of(surd_base_));
            } else {
                pos_ = start;
                fail("sqrt is not allowed over the rational field");
            }
        }
        pos_ = start;
        fail("unknown name '" + std::string(name) + "'");
    }

    Rational parse_rational() {
        BigInt num = parse_uint();
        std::size_t save = pos_;
        if (eat('/')) {
            skip_ws();
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                BigInt den = parse_uint();
                if (den == 0)
                    fail("zero denominator in literal");
                return Rational(num, den);
            }
            pos_ = save;
            fail("expected an integer after '/'");
        }
        return Rational(num);
    }

    BigInt parse_uint() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    long long surd_base_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parse a polynomial expression over K.  surd_base selects the
/// quadratic field Q(sqrt(d)) and is ignored (must be 0) over Q.
template <scalar_field K>
Poly<K> parse_poly(std::string_view text, long long surd_base = 0) {
    return detail::PolyParser<K>(text, surd_base).run();
}

/// Parse a constant scalar (a degree-0 polynomial expression).
template <scalar_field K>
K parse_scalar(std::string_view text, long long surd_base = 0) {
    Poly<K> p = parse_poly<K>(text, surd_base);
    if (!p.is_constant())
        throw parse_error("expected a constant scalar, got a polynomial in x", 0);
    return p.coeff(0);
}

/// Split "num/den" at the unique parenthesis-depth-0 '/'.  No top-level
/// slash means denominator 1; more than one is an error (parenthesize).
inline std::pair<std::string, std::string> split_fraction(std::string_view text) {
    long depth = 0;
    std::size_t slash = text.size();
    bool found = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        else if (c == '/' && depth == 0) {
            if (found)
                throw parse_error("more than one top-level '/'; parenthesize the parts", i);
            slash = i;
            found = true;
        }
    }
    if (!found)
        return {std::string(text), "1"};
    return {std::string(text.substr(0, slash)), std::string(text.substr(slash + 1))};
}

} // namespace pvi

#endif
