#ifndef PVI_SERIALIZE_HPP
#define PVI_SERIALIZE_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "pvi/families.hpp"
#include "pvi/parser.hpp"

namespace pvi {

using Json = nlohmann::ordered_json;

/// The scalar field a record was computed over, as it appears on the
/// wire: Q, or Q(sqrt(d)).
struct FieldDesc {
    bool quadratic = false;
    long long d = 0;

    friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

template <scalar_field K>
FieldDesc field_desc_for(long long d = 0) {
    if constexpr (std::same_as<K, QuadScalar>) {
        if (!is_valid_surd_base(d))
            throw math_error("quadratic field needs a squarefree base >= 2");
        return {true, d};
    } else {
        return {false, 0};
    }
}

inline const char* representation_name(Representation r) {
    return r == Representation::direct ? "direct" : "swapped";
}

namespace detail {

inline Json check_to_json(const std::optional<bool>& v) {
    if (!v)
        return nullptr;
    return *v;
}

inline std::optional<bool> check_from_json(const Json& j) {
    if (j.is_null())
        return std::nullopt;
    return j.get<bool>();
}

template <scalar_field K>
Json coeffs_to_json(const Poly<K>& p) {
    Json arr = Json::array();
    for (const K& c : p.coeffs())
        arr.push_back(c.str());
    return arr;
}

template <scalar_field K>
Poly<K> coeffs_from_json(const Json& arr, long long d) {
    std::vector<K> coeffs;
    for (const auto& c : arr)
        coeffs.push_back(parse_scalar<K>(c.template get<std::string>(), d));
    return Poly<K>::from_coeffs(std::move(coeffs));
}

} // namespace detail

template <scalar_field K>
Json record_to_json(const SolutionRecord<K>& rec, const FieldDesc& field) {
    Json j;
    j["family"] = family_name(rec.family);
    if (field.quadratic)
        j["field"] = {{"kind", "quadratic"}, {"d", field.d}};
    else
        j["field"] = {{"kind", "rational"}};
    Json params = Json::object();
    for (const auto& [name, value] : rec.params)
        params[name] = value.str();
    j["params"] = params;
    j["representation"] = representation_name(rec.representation);
    j["y"] = {{"num", detail::coeffs_to_json(rec.y.num())},
              {"den", detail::coeffs_to_json(rec.y.den())}};
    j["pvi"] = {{"alpha", rec.pvi.alpha.str()},
                {"beta", rec.pvi.beta.str()},
                {"gamma", rec.pvi.gamma.str()},
                {"delta", rec.pvi.delta.str()}};
    j["checks"] = {{"pvi_residual_zero", detail::check_to_json(rec.checks.pvi_residual_zero)},
                   {"riccati_residual_zero",
                    detail::check_to_json(rec.checks.riccati_residual_zero)},
                   {"quadratic_residual_zero",
                    detail::check_to_json(rec.checks.quadratic_residual_zero)}};
    return j;
}

inline FieldDesc field_desc_from_json(const Json& j) {
    const Json& f = j.at("field");
    if (f.at("kind") == "rational")
        return {false, 0};
    if (f.at("kind") == "quadratic")
        return {true, f.at("d").get<long long>()};
    throw parse_error("unknown field kind in JSON", 0);
}

inline Family family_from_name(const std::string& name) {
    for (Family f : {Family::y1, Family::y2, Family::y3, Family::y4, Family::thm2,
                     Family::external})
        if (name == family_name(f))
            return f;
    throw parse_error("unknown family '" + name + "'", 0);
}

template <scalar_field K>
SolutionRecord<K> record_from_json(const Json& j) {
    FieldDesc field = field_desc_from_json(j);
    if (field.quadratic != std::same_as<K, QuadScalar>)
        throw parse_error("record field kind does not match the requested scalar type", 0);

    SolutionRecord<K> rec;
    rec.family = family_from_name(j.at("family").get<std::string>());
    for (const auto& [name, value] : j.at("params").items())
        rec.params.emplace_back(name,
                                parse_scalar<K>(value.template get<std::string>(), field.d));
    std::string repr = j.at("representation").get<std::string>();
    if (repr != "direct" && repr != "swapped")
        throw parse_error("unknown representation '" + repr + "'", 0);
    rec.representation = repr == "direct" ? Representation::direct : Representation::swapped;
    rec.y = RatFunc<K>(detail::coeffs_from_json<K>(j.at("y").at("num"), field.d),
                       detail::coeffs_from_json<K>(j.at("y").at("den"), field.d));
    const Json& p = j.at("pvi");
    rec.pvi = {parse_scalar<K>(p.at("alpha").get<std::string>(), field.d),
               parse_scalar<K>(p.at("beta").get<std::string>(), field.d),
               parse_scalar<K>(p.at("gamma").get<std::string>(), field.d),
               parse_scalar<K>(p.at("delta").get<std::string>(), field.d)};
    const Json& c = j.at("checks");
    rec.checks.pvi_residual_zero = detail::check_from_json(c.at("pvi_residual_zero"));
    rec.checks.riccati_residual_zero = detail::check_from_json(c.at("riccati_residual_zero"));
    rec.checks.quadratic_residual_zero =
        detail::check_from_json(c.at("quadratic_residual_zero"));
    return rec;
}

// --- LaTeX ---------------------------------------------------------------

namespace detail {

inline std::string latex_rational(const Rational& v) {
    if (v.is_integer())
        return v.numerator().str();
    std::string sign = v.sign() < 0 ? "-" : "";
    BigInt num = boost::multiprecision::abs(v.numerator());
    return sign + "\\frac{" + num.str() + "}{" + v.denominator().str() + "}";
}

inline std::string latex_scalar(const Rational& v) { return latex_rational(v); }

inline std::string latex_scalar(const QuadScalar& v) {
    if (v.is_rational())
        return latex_rational(v.rational_part());
    std::string out;
    if (!v.rational_part().is_zero())
        out += latex_rational(v.rational_part());
    Rational mag = v.surd_part().sign() < 0 ? -v.surd_part() : v.surd_part();
    out += v.surd_part().sign() < 0 ? "-" : (out.empty() ? "" : "+");
    if (!mag.is_one())
        out += latex_rational(mag);
    out += "\\sqrt{" + std::to_string(v.surd_base()) + "}";
    return out;
}

/// Terms in descending powers, unit coefficients folded away.
template <scalar_field K>
std::string latex_poly(const Poly<K>& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const K& c = p.coeffs()[i];
        if (c.is_zero())
            continue;
        std::string cs;
        if (i == 0) {
            cs = latex_scalar(c);
        } else if (c.is_one()) {
            cs = "";
        } else if ((-c).is_one()) {
            cs = "-";
        } else {
            cs = latex_scalar(c);
            bool multipart = false;
            for (std::size_t t = 1; t < cs.size(); ++t)
                if (cs[t] == '+' || cs[t] == '-')
                    multipart = true;
            if (multipart)
                cs = "\\left(" + cs + "\\right)";
        }
        std::string term = cs;
        if (i == 1)
            term += "x";
        else if (i > 1)
            term += "x^{" + std::to_string(i) + "}";
        if (!out.empty() && term[0] != '-')
            out += "+";
        out += term;
    }
    return out;
}

} // namespace detail

template <scalar_field K>
std::string latex_ratfunc(const RatFunc<K>& f) {
    if (f.is_polynomial())
        return detail::latex_poly(f.num());
    return "\\frac{" + detail::latex_poly(f.num()) + "}{" + detail::latex_poly(f.den()) + "}";
}

template <scalar_field K>
std::string record_to_latex(const SolutionRecord<K>& rec) {
    return "y = " + latex_ratfunc(rec.y) + "\n\\text{solves } P_{VI}\\left(" +
           detail::latex_scalar(rec.pvi.alpha) + ", " + detail::latex_scalar(rec.pvi.beta) +
           ", " + detail::latex_scalar(rec.pvi.gamma) + ", " +
           detail::latex_scalar(rec.pvi.delta) + "\\right)\n";
}

// --- plain text ----------------------------------------------------------

inline std::string check_label(const std::optional<bool>& v) {
    return v ? (*v ? "true" : "false") : "n/a";
}

template <scalar_field K>
std::string record_to_plain(const SolutionRecord<K>& rec) {
    std::string out;
    out += "family: " + std::string(family_name(rec.family)) + "\n";
    if (!rec.params.empty()) {
        out += "params:";
        for (const auto& [name, value] : rec.params)
            out += " " + name + "=" + value.str();
        out += "\n";
    }
    out += "representation: " + std::string(representation_name(rec.representation)) + "\n";
    out += "y = " + rec.y.str() + "\n";
    out += "solves P_VI(" + rec.pvi.alpha.str() + ", " + rec.pvi.beta.str() + ", " +
           rec.pvi.gamma.str() + ", " + rec.pvi.delta.str() + ")\n";
    out += "checks: pvi_residual_zero=" + check_label(rec.checks.pvi_residual_zero) +
           " riccati_residual_zero=" + check_label(rec.checks.riccati_residual_zero) +
           " quadratic_residual_zero=" + check_label(rec.checks.quadratic_residual_zero) + "\n";
    return out;
}

} // namespace pvi

#endif
