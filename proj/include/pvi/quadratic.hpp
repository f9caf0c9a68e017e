#ifndef PVI_QUADRATIC_HPP
#define PVI_QUADRATIC_HPP

#include <optional>
#include <string>
#include <utility>

#include "pvi/errors.hpp"
#include "pvi/rational.hpp"

namespace pvi {

/// True iff d is a valid surd base: a squarefree integer >= 2.
inline bool is_valid_surd_base(long long d) {
    if (d < 2)
        return false;
    for (long long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0)
            return false;
    return true;
}

/// Exact element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
///
/// d is fixed per computation context.  A value with b = 0 is plain
/// rational and carries no base (d = 0); it combines freely with values
/// of any base, so constants like 0 and 1 need no context to build.
/// Combining two genuinely irrational values of different bases is an
/// error.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(long long n) : rat_(n) {} // NOLINT: implicit by design
    QuadScalar(Rational r) : rat_(std::move(r)) {} // NOLINT: implicit by design
    QuadScalar(Rational rat, Rational surd, long long d)
        : rat_(std::move(rat)), surd_(std::move(surd)), d_(d) {
        if (surd_.is_zero()) {
            d_ = 0;
        } else if (!is_valid_surd_base(d_)) {
            throw math_error("surd base must be a squarefree integer >= 2, got " +
                             std::to_string(d));
        }
    }

    /// sqrt(d) itself.
    static QuadScalar root_of(long long d) { return QuadScalar(0, 1, d); }

    const Rational& rational_part() const { return rat_; }
    const Rational& surd_part() const { return surd_; }
    /// 0 when the value is plain rational.
    long long surd_base() const { return d_; }

    bool is_zero() const { return rat_.is_zero() && surd_.is_zero(); }
    bool is_one() const { return rat_.is_one() && surd_.is_zero(); }
    bool is_rational() const { return surd_.is_zero(); }

    QuadScalar conjugate() const {
        return surd_.is_zero() ? *this : QuadScalar(rat_, -surd_, d_);
    }

    /// rat^2 - d*surd^2; nonzero for every nonzero value since sqrt(d)
    /// is irrational.
    Rational norm() const { return rat_ * rat_ - Rational(d_) * surd_ * surd_; }

    QuadScalar operator-() const {
        QuadScalar r;
        r.rat_ = -rat_;
        r.surd_ = -surd_;
        r.d_ = d_;
        return r;
    }

    friend QuadScalar operator+(const QuadScalar& a, const QuadScalar& b) {
        QuadScalar r;
        r.d_ = merged_base(a, b);
        r.rat_ = a.rat_ + b.rat_;
        r.surd_ = a.surd_ + b.surd_;
        if (r.surd_.is_zero())
            r.d_ = 0;
        return r;
    }
    friend QuadScalar operator-(const QuadScalar& a, const QuadScalar& b) { return a + (-b); }

    friend QuadScalar operator*(const QuadScalar& a, const QuadScalar& b) {
        long long d = merged_base(a, b);
        QuadScalar r;
        r.rat_ = a.rat_ * b.rat_ + Rational(d) * a.surd_ * b.surd_;
        r.surd_ = a.rat_ * b.surd_ + a.surd_ * b.rat_;
        r.d_ = r.surd_.is_zero() ? 0 : d;
        return r;
    }

    friend QuadScalar operator/(const QuadScalar& a, const QuadScalar& b) {
        if (b.is_zero())
            throw math_error("division by zero");
        merged_base(a, b);
        if (b.surd_.is_zero()) {
            QuadScalar r;
            r.rat_ = a.rat_ / b.rat_;
            r.surd_ = a.surd_ / b.rat_;
            r.d_ = r.surd_.is_zero() ? 0 : a.d_;
            return r;
        }
        // Rationalize via the conjugate.
        QuadScalar num = a * b.conjugate();
        Rational n = b.norm();
        QuadScalar r;
        r.rat_ = num.rat_ / n;
        r.surd_ = num.surd_ / n;
        r.d_ = r.surd_.is_zero() ? 0 : b.d_;
        return r;
    }

    QuadScalar& operator+=(const QuadScalar& o) { return *this = *this + o; }
    QuadScalar& operator-=(const QuadScalar& o) { return *this = *this - o; }
    QuadScalar& operator*=(const QuadScalar& o) { return *this = *this * o; }
    QuadScalar& operator/=(const QuadScalar& o) { return *this = *this / o; }

    QuadScalar inverse() const { return QuadScalar(Rational(1)) / *this; }

    friend bool operator==(const QuadScalar& a, const QuadScalar& b) = default;

    /// Canonical encoding: "p/q" when rational, else "p/q+r/u*sqrt(d)"
    /// with the sign of the surd part folded into the joining sign.
    std::string str() const {
        if (surd_.is_zero())
            return rat_.str();
        Rational mag = surd_.sign() < 0 ? -surd_ : surd_;
        return rat_.str() + (surd_.sign() < 0 ? "-" : "+") + mag.str() +
               "*sqrt(" + std::to_string(d_) + ")";
    }

private:
    static long long merged_base(const QuadScalar& a, const QuadScalar& b) {
        if (a.d_ == 0)
            return b.d_;
        if (b.d_ == 0 || a.d_ == b.d_)
            return a.d_;
        throw math_error("mixed surd bases: sqrt(" + std::to_string(a.d_) +
                         ") vs sqrt(" + std::to_string(b.d_) + ")");
    }

    Rational rat_;
    Rational surd_;
    long long d_ = 0;
};

inline std::optional<long long> as_machine_integer(const QuadScalar& v,
                                                   long long bound = kDefaultIntegerBound) {
    if (!v.is_rational())
        return std::nullopt;
    return as_machine_integer(v.rational_part(), bound);
}

inline std::optional<long long> as_nonpositive_integer(const QuadScalar& v,
                                                       long long bound = kDefaultIntegerBound) {
    if (!v.is_rational())
        return std::nullopt;
    return as_nonpositive_integer(v.rational_part(), bound);
}

} // namespace pvi

#endif
