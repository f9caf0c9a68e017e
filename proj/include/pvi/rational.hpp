#ifndef PVI_RATIONAL_HPP
#define PVI_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "pvi/errors.hpp"

namespace pvi {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and
/// denominator, always stored reduced with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {} // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw math_error("rational with zero denominator");
        // Division normalizes sign and gcd; the component constructor
        // does neither.
        v_ = boost::multiprecision::cpp_rational(num);
        v_ /= boost::multiprecision::cpp_rational(den);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw math_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational inverse() const {
        if (is_zero())
            throw math_error("division by zero");
        return Rational(denominator(), numerator());
    }

    /// Canonical encoding: "p" when the denominator is 1, else "p/q".
    std::string str() const { return v_.str(); }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline constexpr long long kDefaultIntegerBound = 1'000'000;

/// The integer value of v as a machine integer, or nullopt when v is not
/// an integer.  An integer beyond the bound is an error, never a silent
/// truncation.
inline std::optional<long long> as_machine_integer(const Rational& v,
                                                   long long bound = kDefaultIntegerBound) {
    if (!v.is_integer())
        return std::nullopt;
    BigInt n = v.numerator();
    if (boost::multiprecision::abs(n) > bound)
        throw math_error("integer magnitude exceeds bound " + std::to_string(bound) +
                         ": " + v.str());
    return static_cast<long long>(n);
}

/// True (with the magnitude) iff v is an integer <= 0.
inline std::optional<long long> as_nonpositive_integer(const Rational& v,
                                                       long long bound = kDefaultIntegerBound) {
    if (!v.is_integer() || v.sign() > 0)
        return std::nullopt;
    auto n = as_machine_integer(v, bound);
    return -*n;
}

} // namespace pvi

#endif
