#ifndef PVI_BIPOLY_HPP
#define PVI_BIPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include "pvi/errors.hpp"
#include "pvi/scalar.hpp"

namespace pvi {

/// Sparse bivariate polynomial in (x, y): monomial (i, j) -> coefficient
/// of x^i y^j.  Zero coefficients are never stored.  Total degrees stay
/// small here, so multiplication is the naive double loop.
template <scalar_field K>
class BiPoly {
public:
    using Monomial = std::pair<unsigned, unsigned>;

    BiPoly() = default;
    explicit BiPoly(K constant) { add_term(0, 0, std::move(constant)); }

    static BiPoly constant(K c) { return BiPoly(std::move(c)); }
    static BiPoly x() { return monomial(1, 0, K{1}); }
    static BiPoly y() { return monomial(0, 1, K{1}); }
    static BiPoly monomial(unsigned i, unsigned j, K c) {
        BiPoly p;
        p.add_term(i, j, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, K>& terms() const { return terms_; }

    K coeff(unsigned i, unsigned j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? K{} : it->second;
    }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& [m, c] : r.terms_)
            c = -c;
        return r;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m.first, m.second, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
        return r;
    }

    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

    std::string str() const {
        if (is_zero())
            return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty())
                out += " + ";
            out += "(" + c.str() + ")";
            if (m.first)
                out += "*x^" + std::to_string(m.first);
            if (m.second)
                out += "*y^" + std::to_string(m.second);
        }
        return out;
    }

private:
    void add_term(unsigned i, unsigned j, K c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace({i, j}, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    std::map<Monomial, K> terms_;
};

/// Unreduced fraction of bivariate polynomials.  No gcd is ever taken:
/// denominators are known nonzero products of x, x-1, y, y-1, y-x, so a
/// fraction is identically zero iff its numerator is.
template <scalar_field K>
struct BiRat {
    BiPoly<K> num;
    BiPoly<K> den;

    BiRat() : num(), den(K{1}) {}
    explicit BiRat(BiPoly<K> p) : num(std::move(p)), den(K{1}) {}
    BiRat(BiPoly<K> n, BiPoly<K> d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero())
            throw math_error("bivariate fraction with zero denominator");
    }

    friend BiRat operator+(const BiRat& a, const BiRat& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend BiRat operator-(const BiRat& a, const BiRat& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend BiRat operator*(const BiRat& a, const BiRat& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend BiRat operator/(const BiRat& a, const BiRat& b) {
        if (b.num.is_zero())
            throw math_error("division by zero bivariate fraction");
        return {a.num * b.den, a.den * b.num};
    }
};

} // namespace pvi

#endif
