#ifndef PVI_FAMILIES_HPP
#define PVI_FAMILIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvi/hypergeometric.hpp"
#include "pvi/painleve.hpp"
#include "pvi/ratfunc.hpp"

namespace pvi {

enum class Family { y1, y2, y3, y4, thm2, external };

inline const char* family_name(Family f) {
    switch (f) {
    case Family::y1: return "y1";
    case Family::y2: return "y2";
    case Family::y3: return "y3";
    case Family::y4: return "y4";
    case Family::thm2: return "thm2";
    case Family::external: return "external";
    }
    return "?";
}

/// Which construction the terminating-representation resolver used: the
/// family's own display, or the partner family's display at the swapped
/// parameters (mu+s, k-s, s) (for Theorem 2, the Euler-transformed
/// form).
enum class Representation { direct, swapped };

enum class RiccatiCase { a_eq_minus_k, a_eq_minus_mu_plus_s };

/// Verification verdicts; absent means not applicable to the family.
struct Checks {
    std::optional<bool> pvi_residual_zero;
    std::optional<bool> riccati_residual_zero;
    std::optional<bool> quadratic_residual_zero;

    friend bool operator==(const Checks&, const Checks&) = default;
};

template <scalar_field K>
struct FamilyParams {
    K k;
    K mu;
    K s;
};

template <scalar_field K>
struct Theorem2Params {
    K n;
    K r;
};

/// A constructed solution, its target equation and the verdicts that
/// were actually computed.  Family constructors throw rather than return
/// a record with a false verdict; the external verifier reports verdicts
/// as found.
template <scalar_field K>
struct SolutionRecord {
    Family family = Family::external;
    std::vector<std::pair<std::string, K>> params;
    Representation representation = Representation::direct;
    RatFunc<K> y;
    PviParams<K> pvi{};
    Checks checks;

    friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

/// The two Riccati coefficient sets with a+d = -(k+mu+s) and ad =
/// k(mu+s): case 1 takes a = -k, case 2 takes a = -(mu+s); both share
/// b = k+mu+1 and c = s-1.
template <scalar_field K>
RiccatiCoeffs<K> params_from_family(const FamilyParams<K>& fp, RiccatiCase which) {
    K b = fp.k + fp.mu + K{1};
    K c = fp.s - K{1};
    if (which == RiccatiCase::a_eq_minus_k)
        return RiccatiCoeffs<K>(-fp.k, b, c, -(fp.mu + fp.s));
    return RiccatiCoeffs<K>(-(fp.mu + fp.s), b, c, -fp.k);
}

namespace detail {

/// 1 + (mu(1-x)/s) F(k+1, 1-mu, s+1, x)/F(k, -mu, s, x), the factor
/// shared by the first-solution families; nullopt when either series
/// fails to terminate.
template <scalar_field K>
std::optional<RatFunc<K>> first_kind_factor(const K& k, const K& mu, const K& s) {
    using R = RatFunc<K>;
    R one{K{1}};
    if (mu.is_zero())
        return one;
    HypParams<K> below{k, -mu, s};
    HypParams<K> above{k + K{1}, K{1} - mu, s + K{1}};
    if (!hyp_termination_degree(below) || !hyp_termination_degree(above))
        return std::nullopt;
    R f{hyp_poly(below)};
    R fd{hyp_poly(above)};
    R x = R::variable();
    return one + R{mu / s} * (one - x) * fd / f;
}

/// (1-s)/x - k/(1-x) + ((k-s+1)(1-mu-s)/(2-s)) F(k-s+2, 2-mu-s, 3-s,
/// x)/F(k-s+1, 1-mu-s, 2-s, x), the bracket shared by the
/// second-solution families; nullopt when the series fail to terminate.
template <scalar_field K>
std::optional<RatFunc<K>> second_kind_bracket(const K& k, const K& mu, const K& s) {
    using R = RatFunc<K>;
    R one{K{1}};
    R x = R::variable();
    K a = k - s + K{1};
    K b = K{1} - mu - s;
    R head = R{K{1} - s} / x - R{k} / (one - x);
    K scale = a * b / (K{2} - s);
    if (scale.is_zero())
        return head;
    HypParams<K> below{a, b, K{2} - s};
    HypParams<K> above{a + K{1}, b + K{1}, K{3} - s};
    if (!hyp_termination_degree(below) || !hyp_termination_degree(above))
        return std::nullopt;
    R f{hyp_poly(below)};
    R fd{hyp_poly(above)};
    return head + R{scale} * fd / f;
}

template <scalar_field K>
void require_zero_residual(const RatFunc<K>& residual, const char* which, Family fam) {
    if (!residual.is_zero())
        throw verification_error(std::string("constructed ") + family_name(fam) +
                                 " fails its " + which + " residual check");
}

template <scalar_field K>
std::vector<std::pair<std::string, K>> family_param_list(const FamilyParams<K>& fp) {
    return {{"k", fp.k}, {"mu", fp.mu}, {"s", fp.s}};
}

} // namespace detail

/// y1(k, mu, s) = x { 1 + (mu(1-x)/s) F(k+1, 1-mu, s+1, x)/F(k, -mu, s,
/// x) }, solving P_VI(k^2/2, -(mu+s)^2/2, (k-s+1)^2/2, (1-mu^2)/2).
/// When the display's series do not terminate, the swapped construction
/// y1(k, mu, s) = y2-display at (mu+s, k-s, s) is tried once.
template <scalar_field K>
SolutionRecord<K> family_y1(const FamilyParams<K>& fp) {
    using R = RatFunc<K>;
    const K &k = fp.k, &mu = fp.mu, &s = fp.s;
    if (s.is_zero())
        throw precondition_error("y1 requires s != 0");
    if (k.is_zero())
        throw precondition_error("y1 requires k != 0");

    SolutionRecord<K> rec;
    rec.family = Family::y1;
    rec.params = detail::family_param_list(fp);

    R x = R::variable();
    if (auto factor = detail::first_kind_factor(k, mu, s)) {
        rec.representation = Representation::direct;
        rec.y = x * *factor;
    } else if (auto swapped = detail::first_kind_factor(mu + s, k - s, s)) {
        rec.representation = Representation::swapped;
        rec.y = R{(mu + s) / k} * x * *swapped;
    } else {
        throw no_representation_error("y1(" + k.str() + ", " + mu.str() + ", " + s.str() +
                                      "): neither the direct nor the swapped series terminates");
    }

    K one{1};
    rec.pvi = {half_of(k * k), -half_of((mu + s) * (mu + s)),
               half_of((k - s + one) * (k - s + one)), half_of(one - mu * mu)};
    detail::require_zero_residual(pvi_residual(rec.y, rec.pvi), "P_VI", Family::y1);
    detail::require_zero_residual(
        riccati_residual(rec.y, params_from_family(fp, RiccatiCase::a_eq_minus_k)), "Riccati",
        Family::y1);
    rec.checks.pvi_residual_zero = true;
    rec.checks.riccati_residual_zero = true;
    return rec;
}

/// y2(k, mu, s) = (k/(mu+s)) y1-display, solving P_VI((mu+s)^2/2,
/// -k^2/2, (mu+1)^2/2, (1-(k-s)^2)/2); swapped form y1-display at
/// (mu+s, k-s, s).
template <scalar_field K>
SolutionRecord<K> family_y2(const FamilyParams<K>& fp) {
    using R = RatFunc<K>;
    const K &k = fp.k, &mu = fp.mu, &s = fp.s;
    if (s.is_zero())
        throw precondition_error("y2 requires s != 0");
    if ((mu + s).is_zero())
        throw precondition_error("y2 requires mu + s != 0");

    SolutionRecord<K> rec;
    rec.family = Family::y2;
    rec.params = detail::family_param_list(fp);

    R x = R::variable();
    if (auto factor = detail::first_kind_factor(k, mu, s)) {
        rec.representation = Representation::direct;
        rec.y = R{k / (mu + s)} * x * *factor;
    } else if (auto swapped = detail::first_kind_factor(mu + s, k - s, s)) {
        rec.representation = Representation::swapped;
        rec.y = x * *swapped;
    } else {
        throw no_representation_error("y2(" + k.str() + ", " + mu.str() + ", " + s.str() +
                                      "): neither the direct nor the swapped series terminates");
    }

    K one{1};
    rec.pvi = {half_of((mu + s) * (mu + s)), -half_of(k * k), half_of((mu + one) * (mu + one)),
               half_of(one - (k - s) * (k - s))};
    detail::require_zero_residual(pvi_residual(rec.y, rec.pvi), "P_VI", Family::y2);
    detail::require_zero_residual(
        riccati_residual(rec.y, params_from_family(fp, RiccatiCase::a_eq_minus_mu_plus_s)),
        "Riccati", Family::y2);
    rec.checks.pvi_residual_zero = true;
    rec.checks.riccati_residual_zero = true;
    return rec;
}

/// y3(k, mu, s) = (x(x-1)/k) { (1-s)/x - k/(1-x) + ((k-s+1)(1-mu-s)/
/// (2-s)) F(k-s+2, 2-mu-s, 3-s, x)/F(k-s+1, 1-mu-s, 2-s, x) }, from the
/// second solution of the hypergeometric equation; same P_VI as y1.
/// Requires s not an integer.
template <scalar_field K>
SolutionRecord<K> family_y3(const FamilyParams<K>& fp) {
    using R = RatFunc<K>;
    const K &k = fp.k, &mu = fp.mu, &s = fp.s;
    if (is_integer(s))
        throw precondition_error("y3 requires s not an integer");
    if (k.is_zero())
        throw precondition_error("y3 requires k != 0");

    SolutionRecord<K> rec;
    rec.family = Family::y3;
    rec.params = detail::family_param_list(fp);

    R x = R::variable();
    R one{K{1}};
    R front = x * (x - one) / R{k};
    if (auto bracket = detail::second_kind_bracket(k, mu, s)) {
        rec.representation = Representation::direct;
        rec.y = front * *bracket;
    } else if (auto swapped = detail::second_kind_bracket(mu + s, k - s, s)) {
        // y3(k, mu, s) = y4-display at (mu+s, k-s, s), whose front
        // divisor mu'+s' equals k again.
        rec.representation = Representation::swapped;
        rec.y = front * *swapped;
    } else {
        throw no_representation_error("y3(" + k.str() + ", " + mu.str() + ", " + s.str() +
                                      "): neither the direct nor the swapped series terminates");
    }

    K one_s{1};
    rec.pvi = {half_of(k * k), -half_of((mu + s) * (mu + s)),
               half_of((k - s + one_s) * (k - s + one_s)), half_of(one_s - mu * mu)};
    detail::require_zero_residual(pvi_residual(rec.y, rec.pvi), "P_VI", Family::y3);
    rec.checks.pvi_residual_zero = true;
    return rec;
}

/// y4(k, mu, s) = (x(x-1)/(mu+s)) second-kind bracket; same P_VI as y2;
/// swapped form y3-display at (mu+s, k-s, s).
template <scalar_field K>
SolutionRecord<K> family_y4(const FamilyParams<K>& fp) {
    using R = RatFunc<K>;
    const K &k = fp.k, &mu = fp.mu, &s = fp.s;
    if (is_integer(s))
        throw precondition_error("y4 requires s not an integer");
    if ((mu + s).is_zero())
        throw precondition_error("y4 requires mu + s != 0");

    SolutionRecord<K> rec;
    rec.family = Family::y4;
    rec.params = detail::family_param_list(fp);

    R x = R::variable();
    R one{K{1}};
    R front = x * (x - one) / R{mu + s};
    if (auto bracket = detail::second_kind_bracket(k, mu, s)) {
        rec.representation = Representation::direct;
        rec.y = front * *bracket;
    } else if (auto swapped = detail::second_kind_bracket(mu + s, k - s, s)) {
        rec.representation = Representation::swapped;
        rec.y = front * *swapped;
    } else {
        throw no_representation_error("y4(" + k.str() + ", " + mu.str() + ", " + s.str() +
                                      "): neither the direct nor the swapped series terminates");
    }

    K one_s{1};
    rec.pvi = {half_of((mu + s) * (mu + s)), -half_of(k * k),
               half_of((mu + one_s) * (mu + one_s)), half_of(one_s - (k - s) * (k - s))};
    detail::require_zero_residual(pvi_residual(rec.y, rec.pvi), "P_VI", Family::y4);
    rec.checks.pvi_residual_zero = true;
    return rec;
}

/// y(n, r) = 1/(n(n-r+1)) { -(r-1)^2/4 + [nx - (r-1)/2 +
/// (n(n+1)x(x-1)/r) F(n+1, n+2, r+1, x)/F(n, n+1, r, x)]^2 }, solving
/// P_VI(0, -(r-1)^2/2, (2n-r+1)^2/2, 0) and the first-order Garnier
/// equation with beta = -(r-1)^2/2, gamma = (2n-r+1)^2/2.
///
/// Terminates directly when n is a negative integer; when n - r is a
/// nonnegative integer the Euler transform F(a,b,c,x) =
/// (1-x)^(c-a-b) F(c-a,c-b,c,x) applied to both series leaves the ratio
/// F(r-n, r-n-1, r+1, x) / ((1-x) F(r-n, r-n-1, r, x)).
template <scalar_field K>
SolutionRecord<K> theorem2_y(const Theorem2Params<K>& tp) {
    using R = RatFunc<K>;
    const K &n = tp.n, &r = tp.r;
    K one{1};
    if (n.is_zero())
        throw precondition_error("theorem2 requires n != 0");
    if ((n - r + one).is_zero())
        throw precondition_error("theorem2 requires n - r + 1 != 0");
    if (as_nonpositive_integer(r))
        throw precondition_error("theorem2 requires r not a nonpositive integer");

    SolutionRecord<K> rec;
    rec.family = Family::thm2;
    rec.params = {{"n", n}, {"r", r}};

    R x = R::variable();
    R ratio;
    if (as_nonpositive_integer(n)) {
        rec.representation = Representation::direct;
        R below{hyp_poly(HypParams<K>{n, n + one, r})};
        R above{hyp_poly(HypParams<K>{n + one, n + K{2}, r + one})};
        ratio = above / below;
    } else if (as_nonnegative_integer(n - r)) {
        rec.representation = Representation::swapped;
        R below{hyp_poly(HypParams<K>{r - n, r - n - one, r})};
        R above{hyp_poly(HypParams<K>{r - n, r - n - one, r + one})};
        ratio = above / ((R{one} - x) * below);
    } else {
        throw no_representation_error(
            "theorem2(" + n.str() + ", " + r.str() +
            "): n is not a negative integer and n - r is not a nonnegative integer");
    }

    K rm1 = r - one;
    R inner = R{n} * x - R{half_of(rm1)} + R{n * (n + one) / r} * x * (x - R{one}) * ratio;
    rec.y = R{one / (n * (n - r + one))} *
            (R{-half_of(half_of(rm1 * rm1))} + inner * inner);

    K beta = -half_of(rm1 * rm1);
    K gamma = half_of((K{2} * n - r + one) * (K{2} * n - r + one));
    rec.pvi = {K{}, beta, gamma, K{}};
    detail::require_zero_residual(pvi_residual(rec.y, rec.pvi), "P_VI", Family::thm2);
    detail::require_zero_residual(quadratic_residual(rec.y, beta, gamma), "Garnier quadratic",
                                  Family::thm2);
    rec.checks.pvi_residual_zero = true;
    rec.checks.quadratic_residual_zero = true;
    return rec;
}

/// Verdict report for an externally supplied candidate.
template <scalar_field K>
struct ExternalReport {
    SolutionRecord<K> record;
    /// The Yuan-Li counterexample hinges on a function that should have
    /// been identically zero and is not; always reported.
    bool y_is_zero = false;
};

/// Verify an externally supplied y against P_VI(p).  Unlike the family
/// constructors this reports a false verdict instead of throwing.
template <scalar_field K>
ExternalReport<K> external_verify(const RatFunc<K>& y, const PviParams<K>& p) {
    ExternalReport<K> out;
    out.y_is_zero = y.is_zero();
    out.record.family = Family::external;
    out.record.representation = Representation::direct;
    out.record.y = y;
    out.record.pvi = p;
    out.record.checks.pvi_residual_zero = pvi_residual(y, p).is_zero();
    return out;
}

} // namespace pvi

#endif
