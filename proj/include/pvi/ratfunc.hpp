#ifndef PVI_RATFUNC_HPP
#define PVI_RATFUNC_HPP

#include <string>
#include <utility>

#include "pvi/poly.hpp"

namespace pvi {

/// Reduced rational function: gcd(num, den) = 1 and den monic, so
/// structural equality is mathematical equality and "residual is
/// identically zero" is is_zero() on the reduced form.
template <scalar_field K>
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly<K>::one()) {}
    explicit RatFunc(K constant) : num_(Poly<K>(std::move(constant))), den_(Poly<K>::one()) {}
    explicit RatFunc(Poly<K> p) : num_(std::move(p)), den_(Poly<K>::one()) {}
    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFunc variable() { return RatFunc(Poly<K>::variable()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero())
            throw math_error("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

    /// Formal derivative via the quotient rule, reduced.
    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    K eval(const K& x0) const {
        K d = den_.eval(x0);
        if (d.is_zero())
            throw math_error("evaluation at a pole");
        return num_.eval(x0) / d;
    }

    std::string str() const {
        if (den_.is_one())
            return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void normalize() {
        if (den_.is_zero())
            throw math_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>::one();
            return;
        }
        Poly<K> g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divrem(num_, g).first;
            den_ = divrem(den_, g).first;
        }
        K lead = den_.leading();
        if (!lead.is_one()) {
            num_ = num_ / lead;
            den_ = den_ / lead;
        }
    }

    Poly<K> num_;
    Poly<K> den_;
};

} // namespace pvi

#endif
