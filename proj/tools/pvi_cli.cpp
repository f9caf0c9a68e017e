// Command-line front end: construct the solution families, verify
// externally supplied candidates, re-run the registry of fixed
// constructions, and scan parameter grids.
//
// Exit codes: 0 all checks pass, 1 verification or construction failure,
// 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pvi/pvi.hpp"
#include "pvi/registry.hpp"

namespace {

using namespace pvi;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct FieldChoice {
    bool quadratic = false;
    long long d = 0;
};

FieldChoice parse_field_flag(const std::string& flag) {
    if (flag == "rational")
        return {};
    if (flag.rfind("quad:", 0) == 0) {
        long long d = 0;
        try {
            d = std::stoll(flag.substr(5));
        } catch (const std::exception&) {
            throw parse_error("bad quadratic field '" + flag + "'", 0);
        }
        if (!is_valid_surd_base(d))
            throw parse_error("quadratic base must be a squarefree integer >= 2", 0);
        return {true, d};
    }
    throw parse_error("--field must be 'rational' or 'quad:<d>'", 0);
}

// ---- generate -------------------------------------------------------------

struct GenerateOpts {
    std::string family;
    std::string k, mu, s;
    std::string n, r;
    std::string field = "rational";
    std::string format = "json";
};

template <scalar_field K>
SolutionRecord<K> build_record(const GenerateOpts& opts, long long d) {
    auto need = [&](const std::string& text, const char* flag) {
        if (text.empty())
            throw parse_error(std::string("family ") + opts.family + " requires --" + flag, 0);
        return parse_scalar<K>(text, d);
    };
    if (opts.family == "thm2")
        return theorem2_y(Theorem2Params<K>{need(opts.n, "n"), need(opts.r, "r")});
    FamilyParams<K> fp{need(opts.k, "k"), need(opts.mu, "mu"), need(opts.s, "s")};
    if (opts.family == "y1")
        return family_y1(fp);
    if (opts.family == "y2")
        return family_y2(fp);
    if (opts.family == "y3")
        return family_y3(fp);
    if (opts.family == "y4")
        return family_y4(fp);
    throw parse_error("unknown family '" + opts.family + "'", 0);
}

template <scalar_field K>
int run_generate(const GenerateOpts& opts, long long d) {
    SolutionRecord<K> rec = build_record<K>(opts, d);
    if (opts.format == "json")
        std::cout << record_to_json(rec, field_desc_for<K>(d)).dump(2) << "\n";
    else if (opts.format == "latex")
        std::cout << record_to_latex(rec);
    else if (opts.format == "plain")
        std::cout << record_to_plain(rec);
    else
        throw parse_error("--format must be json, latex or plain", 0);
    // Constructors refuse to return records with failing verdicts, so
    // reaching this point means every applicable check passed.
    return kExitPass;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOpts {
    std::string y;
    std::string alpha, beta, gamma, delta;
    std::string quadratic_beta, quadratic_gamma;
    std::string field = "rational";
};

template <scalar_field K>
int run_verify(const VerifyOpts& opts, long long d) {
    auto [num_text, den_text] = split_fraction(opts.y);
    RatFunc<K> y(parse_poly<K>(num_text, d), parse_poly<K>(den_text, d));
    PviParams<K> p{parse_scalar<K>(opts.alpha, d), parse_scalar<K>(opts.beta, d),
                   parse_scalar<K>(opts.gamma, d), parse_scalar<K>(opts.delta, d)};

    ExternalReport<K> report = external_verify(y, p);
    bool pass = report.record.checks.pvi_residual_zero.value_or(false);
    std::cout << "y = " << y.str() << "\n";
    std::cout << "P_VI(" << p.alpha.str() << ", " << p.beta.str() << ", " << p.gamma.str()
              << ", " << p.delta.str() << ") residual zero: " << (pass ? "true" : "false")
              << "\n";
    std::cout << "y identically zero: " << (report.y_is_zero ? "true" : "false") << "\n";

    if (!opts.quadratic_beta.empty() || !opts.quadratic_gamma.empty()) {
        if (opts.quadratic_beta.empty() || opts.quadratic_gamma.empty())
            throw parse_error("--quadratic-beta and --quadratic-gamma go together", 0);
        K qb = parse_scalar<K>(opts.quadratic_beta, d);
        K qg = parse_scalar<K>(opts.quadratic_gamma, d);
        bool qzero = quadratic_residual(y, qb, qg).is_zero();
        std::cout << "Garnier quadratic residual zero: " << (qzero ? "true" : "false") << "\n";
    }
    return pass ? kExitPass : kExitFail;
}

// ---- examples ---------------------------------------------------------------

int run_examples(const std::string& name) {
    bool all = true;
    bool found = name.empty();
    for (const ExampleEntry& entry : example_registry()) {
        if (!name.empty() && entry.name != name)
            continue;
        found = true;
        ExampleOutcome outcome = entry.run();
        std::cout << (outcome.pass ? "PASS" : "FAIL") << "  " << entry.name << "\n";
        for (const std::string& diff : outcome.diffs)
            std::cout << "      " << diff << "\n";
        all = all && outcome.pass;
    }
    if (!found)
        throw parse_error("unknown example '" + name + "'", 0);
    return all ? kExitPass : kExitFail;
}

// ---- scan -------------------------------------------------------------------

struct ScanOpts {
    std::string family;
    std::string k, mu, s;
    std::string n, r;
    std::string field = "rational";
    std::string format = "csv";
    std::string out;
};

/// "a..b" is an inclusive integer range; otherwise a comma-separated
/// list of scalar expressions.
template <scalar_field K>
std::vector<K> parse_grid(const std::string& text, long long d, const char* flag) {
    if (text.empty())
        throw parse_error(std::string("scan of this family requires --") + flag, 0);
    std::vector<K> out;
    auto dots = text.find("..");
    if (dots != std::string::npos && text.find(',') == std::string::npos) {
        long long lo = 0, hi = 0;
        try {
            std::size_t used = 0;
            lo = std::stoll(text.substr(0, dots), &used);
            if (used != dots)
                throw std::invalid_argument("");
            std::string rest = text.substr(dots + 2);
            hi = std::stoll(rest, &used);
            if (used != rest.size())
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw parse_error("bad range '" + text + "' for --" + flag, 0);
        }
        if (lo > hi)
            throw parse_error("empty range '" + text + "' for --" + flag, 0);
        for (long long v = lo; v <= hi; ++v)
            out.push_back(scalar_from_rational<K>(Rational(v)));
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        if (item.empty())
            throw parse_error("empty entry in list '" + text + "' for --" + flag, 0);
        out.push_back(parse_scalar<K>(item, d));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

struct ScanRow {
    std::vector<std::pair<std::string, std::string>> params;
    std::string representation; // direct | swapped | failed
    std::optional<std::vector<std::string>> pvi;
    Checks checks;
    std::string status; // ok | skipped
    std::string reason;
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

template <scalar_field K>
ScanRow scan_one(const std::string& family, const std::vector<std::pair<std::string, K>>& params,
                 const std::function<SolutionRecord<K>()>& make) {
    ScanRow row;
    for (const auto& [name, value] : params)
        row.params.emplace_back(name, value.str());
    try {
        SolutionRecord<K> rec = make();
        row.representation = representation_name(rec.representation);
        row.pvi = {rec.pvi.alpha.str(), rec.pvi.beta.str(), rec.pvi.gamma.str(),
                   rec.pvi.delta.str()};
        row.checks = rec.checks;
        row.status = "ok";
    } catch (const no_representation_error& e) {
        row.representation = "failed";
        row.status = "skipped";
        row.reason = e.what();
    } catch (const math_error& e) {
        row.representation = "failed";
        row.status = "skipped";
        row.reason = e.what();
    }
    return row;
}

template <scalar_field K>
std::vector<ScanRow> scan_rows(const ScanOpts& opts, long long d) {
    std::vector<ScanRow> rows;
    if (opts.family == "thm2") {
        auto ns = parse_grid<K>(opts.n, d, "n");
        auto rs = parse_grid<K>(opts.r, d, "r");
        for (const K& n : ns)
            for (const K& r : rs)
                rows.push_back(scan_one<K>(
                    opts.family, {{"n", n}, {"r", r}},
                    [&] { return theorem2_y(Theorem2Params<K>{n, r}); }));
        return rows;
    }
    auto ks = parse_grid<K>(opts.k, d, "k");
    auto mus = parse_grid<K>(opts.mu, d, "mu");
    auto ss = parse_grid<K>(opts.s, d, "s");
    for (const K& k : ks)
        for (const K& mu : mus)
            for (const K& s : ss)
                rows.push_back(scan_one<K>(
                    opts.family, {{"k", k}, {"mu", mu}, {"s", s}}, [&] {
                        FamilyParams<K> fp{k, mu, s};
                        if (opts.family == "y1")
                            return family_y1(fp);
                        if (opts.family == "y2")
                            return family_y2(fp);
                        if (opts.family == "y3")
                            return family_y3(fp);
                        if (opts.family == "y4")
                            return family_y4(fp);
                        throw parse_error("unknown family '" + opts.family + "'", 0);
                    }));
    return rows;
}

std::string scan_to_csv(const std::string& family, const std::vector<ScanRow>& rows) {
    std::string out = "family";
    if (!rows.empty())
        for (const auto& [name, value] : rows.front().params)
            out += "," + name;
    out += ",representation,alpha,beta,gamma,delta,pvi_residual_zero,riccati_residual_zero,"
           "quadratic_residual_zero,status,reason\n";
    for (const ScanRow& row : rows) {
        out += family;
        for (const auto& [name, value] : row.params)
            out += "," + csv_escape(value);
        out += "," + row.representation;
        for (int i = 0; i < 4; ++i)
            out += "," + (row.pvi ? csv_escape((*row.pvi)[i]) : std::string());
        auto cell = [](const std::optional<bool>& v) {
            return v ? (*v ? std::string("true") : std::string("false")) : std::string();
        };
        out += "," + cell(row.checks.pvi_residual_zero);
        out += "," + cell(row.checks.riccati_residual_zero);
        out += "," + cell(row.checks.quadratic_residual_zero);
        out += "," + row.status;
        out += "," + csv_escape(row.reason);
        out += "\n";
    }
    return out;
}

Json scan_to_json(const std::string& family, const std::vector<ScanRow>& rows) {
    Json arr = Json::array();
    for (const ScanRow& row : rows) {
        Json j;
        j["family"] = family;
        Json params = Json::object();
        for (const auto& [name, value] : row.params)
            params[name] = value;
        j["params"] = params;
        j["representation"] = row.representation;
        if (row.pvi)
            j["pvi"] = {{"alpha", (*row.pvi)[0]},
                        {"beta", (*row.pvi)[1]},
                        {"gamma", (*row.pvi)[2]},
                        {"delta", (*row.pvi)[3]}};
        else
            j["pvi"] = nullptr;
        j["checks"] = {
            {"pvi_residual_zero", detail::check_to_json(row.checks.pvi_residual_zero)},
            {"riccati_residual_zero", detail::check_to_json(row.checks.riccati_residual_zero)},
            {"quadratic_residual_zero",
             detail::check_to_json(row.checks.quadratic_residual_zero)}};
        j["status"] = row.status;
        j["reason"] = row.reason;
        arr.push_back(std::move(j));
    }
    return arr;
}

template <scalar_field K>
int run_scan(const ScanOpts& opts, long long d) {
    std::vector<ScanRow> rows = scan_rows<K>(opts, d);
    if (rows.empty())
        throw parse_error("empty parameter grid", 0);

    std::string payload;
    if (opts.format == "csv")
        payload = scan_to_csv(opts.family, rows);
    else if (opts.format == "json")
        payload = scan_to_json(opts.family, rows).dump(2) + "\n";
    else
        throw parse_error("--format must be csv or json", 0);

    if (opts.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream file(opts.out, std::ios::binary);
        if (!file)
            throw parse_error("cannot write to '" + opts.out + "'", 0);
        file << payload;
        if (!file.good())
            throw parse_error("write to '" + opts.out + "' failed", 0);
    }

    std::size_t ok = 0, skipped = 0;
    for (const ScanRow& row : rows)
        row.status == "ok" ? ++ok : ++skipped;
    std::cerr << "scanned " << rows.size() << " tuples: " << ok << " ok, " << skipped
              << " skipped\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rational solutions of the sixth Painleve equation"};
    app.require_subcommand(1);

    GenerateOpts gen;
    CLI::App* generate =
        app.add_subcommand("generate", "construct one solution and print its record");
    generate->add_option("--family", gen.family, "y1, y2, y3, y4 or thm2")->required();
    generate->add_option("--k", gen.k, "parameter k");
    generate->add_option("--mu", gen.mu, "parameter mu");
    generate->add_option("--s", gen.s, "parameter s");
    generate->add_option("--n", gen.n, "parameter n (thm2)");
    generate->add_option("--r", gen.r, "parameter r (thm2)");
    generate->add_option("--field", gen.field, "rational (default) or quad:<d>");
    generate->add_option("--format", gen.format, "json (default), latex or plain");

    VerifyOpts ver;
    CLI::App* verify =
        app.add_subcommand("verify", "check a candidate y against P_VI(alpha,beta,gamma,delta)");
    verify
        ->add_option("--y", ver.y,
                     "candidate as <num-expr>/<den-expr>; the split is at the "
                     "parenthesis-depth-0 '/', so parenthesize scalar fractions")
        ->required();
    verify->add_option("--alpha", ver.alpha)->required();
    verify->add_option("--beta", ver.beta)->required();
    verify->add_option("--gamma", ver.gamma)->required();
    verify->add_option("--delta", ver.delta)->required();
    verify->add_option("--quadratic-beta", ver.quadratic_beta,
                       "also check the first-order Garnier equation with this beta");
    verify->add_option("--quadratic-gamma", ver.quadratic_gamma, "Garnier gamma");
    verify->add_option("--field", ver.field, "rational (default) or quad:<d>");

    std::string example_name;
    CLI::App* examples =
        app.add_subcommand("examples", "re-run the registry of fixed constructions");
    examples->add_option("--name", example_name,
                         "heun-collapse, sqrt2-remark or yuanli-counterexample (default all)");

    ScanOpts scan;
    CLI::App* scan_cmd = app.add_subcommand("scan", "construct a whole parameter grid");
    scan_cmd->add_option("--family", scan.family, "y1, y2, y3, y4 or thm2")->required();
    scan_cmd->add_option("--k", scan.k, "grid: 'a..b' integer range or comma list");
    scan_cmd->add_option("--mu", scan.mu, "grid");
    scan_cmd->add_option("--s", scan.s, "grid");
    scan_cmd->add_option("--n", scan.n, "grid (thm2)");
    scan_cmd->add_option("--r", scan.r, "grid (thm2)");
    scan_cmd->add_option("--field", scan.field, "rational (default) or quad:<d>");
    scan_cmd->add_option("--format", scan.format, "csv (default) or json");
    scan_cmd->add_option("--out", scan.out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            FieldChoice fc = parse_field_flag(gen.field);
            return fc.quadratic ? run_generate<QuadScalar>(gen, fc.d)
                                : run_generate<Rational>(gen, 0);
        }
        if (verify->parsed()) {
            FieldChoice fc = parse_field_flag(ver.field);
            return fc.quadratic ? run_verify<QuadScalar>(ver, fc.d)
                                : run_verify<Rational>(ver, 0);
        }
        if (examples->parsed())
            return run_examples(example_name);
        if (scan_cmd->parsed()) {
            FieldChoice fc = parse_field_flag(scan.field);
            return fc.quadratic ? run_scan<QuadScalar>(scan, fc.d)
                                : run_scan<Rational>(scan, 0);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
