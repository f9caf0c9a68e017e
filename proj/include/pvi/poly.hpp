#ifndef PVI_POLY_HPP
#define PVI_POLY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pvi/errors.hpp"
#include "pvi/scalar.hpp"

namespace pvi {

/// Univariate polynomial over an exact scalar field, coefficients stored
/// by ascending power with trailing zeros trimmed.  The zero polynomial
/// has no coefficients and no degree; callers branch on is_zero() rather
/// than on a -1 sentinel.
template <scalar_field K>
class Poly {
public:
    Poly() = default;
    explicit Poly(K constant) {
        if (!constant.is_zero())
            c_.push_back(std::move(constant));
    }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(K{1}); }
    /// The variable x.
    static Poly variable() { return from_coeffs({K{}, K{1}}); }
    static Poly from_coeffs(std::vector<K> coeffs) {
        Poly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }
    /// c * x^n
    static Poly monomial(K c, std::size_t n) {
        Poly p;
        if (!c.is_zero()) {
            p.c_.assign(n + 1, K{});
            p.c_[n] = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    std::size_t degree() const {
        if (is_zero())
            throw math_error("degree of the zero polynomial");
        return c_.size() - 1;
    }

    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K{}; }
    const K& leading() const {
        if (is_zero())
            throw math_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Poly operator-() const {
        Poly r = *this;
        for (K& c : r.c_)
            c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K{});
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero())
            return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K{});
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend Poly operator*(const Poly& a, const K& s) { return a * Poly(s); }
    friend Poly operator*(const K& s, const Poly& a) { return a * Poly(s); }
    friend Poly operator/(const Poly& a, const K& s) {
        if (s.is_zero())
            throw math_error("division by zero");
        Poly r = a;
        for (K& c : r.c_)
            c = c / s;
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Quotient and remainder with deg(rem) < deg(divisor).
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero())
            throw math_error("polynomial division by zero");
        Poly q, r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            K factor = r.leading() / b.leading();
            std::size_t shift = r.degree() - b.degree();
            Poly term = monomial(factor, shift);
            q += term;
            r -= term * b;
        }
        return {q, r};
    }

    Poly derivative() const {
        Poly r;
        if (c_.size() <= 1)
            return r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_[i - 1] = c_[i] * scalar_from_rational<K>(Rational(static_cast<long long>(i)));
        r.trim();
        return r;
    }

    K eval(const K& x0) const {
        K acc{};
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x0 + c_[i];
        return acc;
    }

    Poly pow(unsigned long e) const {
        Poly base = *this, acc = one();
        while (e != 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    Poly monic() const {
        if (is_zero())
            throw math_error("monic of the zero polynomial");
        return *this / leading();
    }

    /// Canonical form: ascending powers, explicit '*' and '^',
    /// multi-part coefficients parenthesized.  Round-trips through the
    /// expression parser.
    std::string str() const {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero())
                continue;
            std::string term = term_str(c_[i], i);
            if (out.empty() || term[0] == '-')
                out += term;
            else
                out += "+" + term;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    static std::string term_str(const K& c, std::size_t power) {
        if (power == 0)
            return c.str();
        std::string xpart = power == 1 ? "x" : "x^" + std::to_string(power);
        if (c.is_one())
            return xpart;
        if ((-c).is_one())
            return "-" + xpart;
        std::string cs = c.str();
        bool multipart = false;
        for (std::size_t i = 1; i < cs.size(); ++i)
            if (cs[i] == '+' || cs[i] == '-')
                multipart = true;
        if (multipart)
            cs = "(" + cs + ")";
        return cs + "*" + xpart;
    }

    std::vector<K> c_;
};

namespace detail {

/// Integer-coefficient image of a rational polynomial, made primitive
/// with positive leading coefficient.
inline std::vector<BigInt> primitive_integer_coeffs(const Poly<Rational>& p) {
    BigInt lcm = 1;
    for (const Rational& c : p.coeffs())
        lcm = boost::multiprecision::lcm(lcm, c.denominator());
    std::vector<BigInt> out(p.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = p.coeffs()[i].numerator() * (lcm / p.coeffs()[i].denominator());
    BigInt content = 0;
    for (const BigInt& c : out)
        content = boost::multiprecision::gcd(content, c);
    if (out.back() < 0)
        content = -content;
    for (BigInt& c : out)
        c /= content;
    return out;
}

inline void make_primitive(std::vector<BigInt>& p) {
    BigInt content = 0;
    for (const BigInt& c : p)
        content = boost::multiprecision::gcd(content, c);
    if (p.back() < 0)
        content = -content;
    for (BigInt& c : p)
        c /= content;
}

/// Pseudo-remainder of primitive integer polynomials: the remainder of
/// lead(v)^(deg u - deg v + 1) * u divided by v, computed in place.
inline std::vector<BigInt> integer_pseudo_rem(std::vector<BigInt> u,
                                              const std::vector<BigInt>& v) {
    const BigInt& lead = v.back();
    while (u.size() >= v.size()) {
        BigInt top = u.back();
        for (BigInt& c : u)
            c *= lead;
        std::size_t shift = u.size() - v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            u[shift + i] -= top * v[i];
        while (!u.empty() && u.back() == 0)
            u.pop_back();
        if (u.empty())
            break;
    }
    return u;
}

/// Primitive-PRS gcd over the integers; much faster than a fraction
/// Euclid because no rational normalization happens inside the loop.
inline Poly<Rational> rational_gcd(const Poly<Rational>& a, const Poly<Rational>& b) {
    std::vector<BigInt> u = primitive_integer_coeffs(a);
    std::vector<BigInt> v = primitive_integer_coeffs(b);
    if (u.size() < v.size())
        std::swap(u, v);
    while (v.size() > 1) {
        std::vector<BigInt> r = integer_pseudo_rem(u, v);
        if (r.empty()) {
            std::vector<Rational> coeffs(v.size());
            for (std::size_t i = 0; i < v.size(); ++i)
                coeffs[i] = Rational(v[i]);
            return Poly<Rational>::from_coeffs(std::move(coeffs)).monic();
        }
        make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    return Poly<Rational>::one();
}

} // namespace detail

/// Monic greatest common divisor.  Over Q the computation runs as a
/// primitive pseudo-remainder sequence over the integers; over other
/// fields it is the Euclidean algorithm with remainders re-normalized to
/// monic at each step to keep coefficient growth in check.
template <scalar_field K>
Poly<K> gcd(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() && b.is_zero())
        throw math_error("gcd of two zero polynomials");
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if constexpr (std::same_as<K, Rational>) {
        return detail::rational_gcd(a, b);
    } else {
        Poly<K> u = a, v = b;
        while (!v.is_zero()) {
            auto [q, r] = divrem(u, v);
            (void)q;
            u = v;
            v = r.is_zero() ? r : r.monic();
        }
        return u.monic();
    }
}

} // namespace pvi

#endif
