#ifndef PVI_REGISTRY_HPP
#define PVI_REGISTRY_HPP

#include <functional>
#include <string>
#include <vector>

#include "pvi/heun.hpp"
#include "pvi/serialize.hpp"

namespace pvi {

/// Outcome of re-running one registry entry: every golden comparison and
/// re-computed verdict, with a diff line per mismatch.
struct ExampleOutcome {
    std::string name;
    bool pass = true;
    std::vector<std::string> diffs;

    void check(const std::string& what, bool ok, const std::string& expected = "",
               const std::string& actual = "") {
        if (ok)
            return;
        pass = false;
        std::string line = what;
        if (!expected.empty() || !actual.empty())
            line += ": expected " + expected + ", got " + actual;
        diffs.push_back(std::move(line));
    }
};

struct ExampleEntry {
    std::string name;
    std::string description;
    std::function<ExampleOutcome()> run;
};

namespace detail {

template <scalar_field K>
void check_coeff_strings(ExampleOutcome& out, const std::string& what, const Poly<K>& p,
                         const std::vector<std::string>& golden) {
    const auto& cs = p.coeffs();
    if (cs.size() != golden.size()) {
        out.check(what + " length", false, std::to_string(golden.size()),
                  std::to_string(cs.size()));
        return;
    }
    for (std::size_t i = 0; i < cs.size(); ++i)
        out.check(what + "[" + std::to_string(i) + "]", cs[i].str() == golden[i], golden[i],
                  cs[i].str());
}

template <scalar_field K>
void check_pvi_strings(ExampleOutcome& out, const PviParams<K>& p,
                       const std::vector<std::string>& golden) {
    const K* vals[] = {&p.alpha, &p.beta, &p.gamma, &p.delta};
    const char* names[] = {"alpha", "beta", "gamma", "delta"};
    for (int i = 0; i < 4; ++i)
        out.check(std::string("pvi.") + names[i], vals[i]->str() == golden[i], golden[i],
                  vals[i]->str());
}

inline ExampleOutcome run_heun_collapse() {
    using K = Rational;
    ExampleOutcome out{"heun-collapse"};

    auto sols = heun_poly_solutions(HeunCoeffs<K>{8, 2, 30});
    out.check("polynomial solution span is one-dimensional", sols.basis.size() == 1, "1",
              std::to_string(sols.basis.size()));
    if (sols.basis.size() != 1)
        return out;
    const Poly<K>& w = sols.basis[0];
    check_coeff_strings(out, "w", w,
                        {"1", "-15", "90", "-295", "594", "-771", "650", "-345", "105", "-14"});

    Poly<K> cubic = hyp_poly(HypParams<K>{6, -3, 2});
    check_coeff_strings(out, "F(6,-3,2)", cubic, {"1", "-9", "21", "-14"});
    Poly<K> onemx = parse_poly<K>("(1-x)^6");
    out.check("w factors as (1-x)^6 F(6,-3,2)", onemx * cubic == w);

    RatFunc<K> rw{w};
    RatFunc<K> x = RatFunc<K>::variable();
    RatFunc<K> one{K{1}};
    RatFunc<K> collapsed = x * (x - one) * RatFunc<K>{w.derivative()} / (RatFunc<K>{K{6}} * rw);

    SolutionRecord<K> rec = family_y1(FamilyParams<K>{6, 3, 2});
    out.check("x(x-1)w'/(6w) collapses to y1(6,3,2)", collapsed == rec.y);
    check_coeff_strings(out, "y.num", rec.y.num(), {"0", "-5/28", "5/4", "-5/2", "3/2"});
    check_coeff_strings(out, "y.den", rec.y.den(), {"-1/14", "9/14", "-3/2", "1"});
    check_pvi_strings(out, rec.pvi, {"18", "-25/2", "25/2", "-4"});
    out.check("representation", rec.representation == Representation::direct, "direct",
              representation_name(rec.representation));
    out.check("P_VI residual re-check", pvi_residual(rec.y, rec.pvi).is_zero());
    out.check("Riccati residual re-check",
              riccati_residual(rec.y, RiccatiCoeffs<K>{-6, 10, 1, -5}).is_zero());
    return out;
}

inline ExampleOutcome run_sqrt2_remark() {
    using K = QuadScalar;
    ExampleOutcome out{"sqrt2-remark"};
    K rt2 = QuadScalar::root_of(2);

    SolutionRecord<K> rec = family_y2(FamilyParams<K>{K{4}, rt2, K{2}});
    check_coeff_strings(out, "y.num", rec.y.num(),
                        {"0", "48/7-30/7*sqrt(2)", "-8+4*sqrt(2)", "3-1*sqrt(2)"});
    check_coeff_strings(out, "y.den", rec.y.den(),
                        {"24/7-15/7*sqrt(2)", "-18/7+6/7*sqrt(2)", "1"});
    check_pvi_strings(out, rec.pvi, {"3+2*sqrt(2)", "-8", "3/2+1*sqrt(2)", "-3/2"});
    out.check("representation", rec.representation == Representation::swapped, "swapped",
              representation_name(rec.representation));

    RatFunc<K> display(
        parse_poly<K>("(3-sqrt(2))*x*(7*x^2-16*x+4*x*sqrt(2)+12-6*sqrt(2))", 2),
        parse_poly<K>("7*x^2+6*x*sqrt(2)-18*x+24-15*sqrt(2)", 2));
    out.check("y2(4,sqrt(2),2) equals the displayed function", rec.y == display);

    SolutionRecord<K> other = family_y1(FamilyParams<K>{K{2} + rt2, K{2}, K{2}});
    out.check("equals y1(2+sqrt(2),2,2)", other.y == rec.y);
    out.check("P_VI residual re-check", pvi_residual(rec.y, rec.pvi).is_zero());
    return out;
}

inline ExampleOutcome run_yuanli_counterexample() {
    using K = Rational;
    ExampleOutcome out{"yuanli-counterexample"};

    RatFunc<K> w(parse_poly<K>("x*(x+8)*(x^2+14*x+21)"), parse_poly<K>("4*(2*x+7)^2"));
    check_coeff_strings(out, "w.num", w.num(), {"0", "21/2", "133/16", "11/8", "1/16"});
    check_coeff_strings(out, "w.den", w.den(), {"49/4", "7", "1"});
    ExternalReport<K> rep = external_verify(w, PviParams<K>{0, -18, 50, 0});
    out.check("w solves P_VI(0,-18,50,0)",
              rep.record.checks.pvi_residual_zero.value_or(false));

    RatFunc<K> v(parse_poly<K>("4*(2*x+7)^2"),
                 parse_poly<K>("(x+7)*(x+8)*(x^2+7*x+28)"));
    check_coeff_strings(out, "v.num", v.num(), {"196", "112", "16"});
    check_coeff_strings(out, "v.den", v.den(), {"1568", "812", "189", "22", "1"});
    out.check("v is not identically zero", !v.is_zero());
    return out;
}

} // namespace detail

/// The fixed constructions re-checked by `examples`: each entry rebuilds
/// its objects from scratch, compares canonical output against frozen
/// golden values, and re-runs every verdict.
inline const std::vector<ExampleEntry>& example_registry() {
    static const std::vector<ExampleEntry> entries = {
        {"heun-collapse",
         "degenerate Heun equation with (r,s,t) = (8,2,30): one-dimensional polynomial "
         "solution span, its factorization through F(6,-3,2,x), and the collapse to a "
         "solution of P_VI(18,-25/2,25/2,-4)",
         detail::run_heun_collapse},
        {"sqrt2-remark",
         "unexpected rational solution over Q(sqrt(2)): y2(4,sqrt(2),2) equals "
         "y1(2+sqrt(2),2,2) and solves P_VI((2+sqrt(2))^2/2,-8,(1+sqrt(2))^2/2,-3/2)",
         detail::run_sqrt2_remark},
        {"yuanli-counterexample",
         "counterexample to Yuan-Li (2002), Theorem 4.2: w = x(x+8)(x^2+14x+21)/(4(2x+7)^2) "
         "solves P_VI(0,-18,50,0) while the accompanying v is not identically zero",
         detail::run_yuanli_counterexample},
    };
    return entries;
}

} // namespace pvi

#endif
