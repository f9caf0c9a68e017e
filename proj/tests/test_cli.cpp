#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

/// Run the built binary (path in $PVI_CLI) with stderr dropped.
CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("PVI_CLI");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        result.out.append(buf, n);
    int status = pclose(pipe);
    result.code = WEXITSTATUS(status);
    return result;
}

} // namespace

TEST_CASE("generate") {
    SECTION("the example, plain format") {
        auto r = run_cli("generate --family y1 --k 6 --mu 3 --s 2 --format plain");
        CHECK(r.code == 0);
        CHECK(r.out.find("solves P_VI(18, -25/2, 25/2, -4)") != std::string::npos);
        CHECK(r.out.find("(-5/28*x+5/4*x^2-5/2*x^3+3/2*x^4)/(-1/14+9/14*x-3/2*x^2+x^3)") !=
              std::string::npos);
    }
    SECTION("theorem 2, json format") {
        auto r = run_cli("generate --family thm2 --n -1 --r 2");
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("y").at("num") == nlohmann::json({"0", "1/2", "1/2"}));
        CHECK(j.at("y").at("den") == nlohmann::json({"1"}));
        CHECK(j.at("pvi").at("gamma") == "9/2");
    }
    SECTION("the remark over quad:2") {
        auto r = run_cli("generate --family y2 --k 4 --mu '0+1*sqrt(2)' --s 2 --field quad:2");
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("field").at("d") == 2);
        CHECK(j.at("representation") == "swapped");
        CHECK(j.at("y").at("num")[3] == "3-1*sqrt(2)");
    }
    SECTION("latex format") {
        auto r = run_cli("generate --family thm2 --n 1 --r 1 --format latex");
        CHECK(r.code == 0);
        CHECK(r.out.find("x^{2}") != std::string::npos);
    }
    SECTION("construction failures exit 1") {
        CHECK(run_cli("generate --family y3 --k 1 --mu 1 --s 2").code == 1);
        CHECK(run_cli("generate --family y1 --k 1 --mu 1/2 --s 1/3").code == 1);
    }
    SECTION("usage errors exit 2") {
        CHECK(run_cli("generate --family nope --k 1 --mu 1 --s 2").code == 2);
        CHECK(run_cli("generate --family y1 --mu 1 --s 2").code == 2);
        CHECK(run_cli("generate").code == 2);
        CHECK(run_cli("generate --family y1 --k '1+' --mu 1 --s 2").code == 2);
        CHECK(run_cli("generate --family y1 --k 1 --mu 1 --s 2 --field quad:4").code == 2);
    }
}

TEST_CASE("verify") {
    SECTION("the counterexample") {
        auto r = run_cli("verify --y 'x*(x+8)*(x^2+14*x+21)/(4*(2*x+7)^2)' "
                         "--alpha 0 --beta -18 --gamma 50 --delta 0");
        CHECK(r.code == 0);
        CHECK(r.out.find("residual zero: true") != std::string::npos);
        CHECK(r.out.find("y identically zero: false") != std::string::npos);
    }
    SECTION("x^2 solves P_VI(0,0,2,0)") {
        CHECK(run_cli("verify --y 'x^2' --alpha 0 --beta 0 --gamma 2 --delta 0").code == 0);
    }
    SECTION("with the Garnier quadratic check") {
        auto r = run_cli("verify --y 'x*(x+1)/2' --alpha 0 --beta -1/2 --gamma 9/2 --delta 0 "
                         "--quadratic-beta -1/2 --quadratic-gamma 9/2");
        CHECK(r.code == 0);
        CHECK(r.out.find("Garnier quadratic residual zero: true") != std::string::npos);
    }
    SECTION("a non-solution exits 1 with a false verdict") {
        auto r = run_cli("verify --y 'x^2' --alpha 1 --beta 1 --gamma 1 --delta 1");
        CHECK(r.code == 1);
        CHECK(r.out.find("residual zero: false") != std::string::npos);
    }
    SECTION("y identically x is outside the domain") {
        CHECK(run_cli("verify --y 'x' --alpha 0 --beta 0 --gamma 2 --delta 0").code == 1);
    }
}

TEST_CASE("examples") {
    CHECK(run_cli("examples").code == 0);
    for (const char* name : {"heun-collapse", "sqrt2-remark", "yuanli-counterexample"}) {
        auto r = run_cli(std::string("examples --name ") + name);
        CAPTURE(name);
        CHECK(r.code == 0);
        CHECK(r.out.find("PASS") != std::string::npos);
    }
    CHECK(run_cli("examples --name bogus").code == 2);
}

TEST_CASE("scan") {
    SECTION("y1 grid is fully verified and deterministic") {
        std::string flags = "scan --family y1 --mu 1..3 --k 1..3 --s 2";
        auto r1 = run_cli(flags);
        auto r2 = run_cli(flags);
        CHECK(r1.code == 0);
        CHECK(r1.out == r2.out);
        std::size_t ok_rows = 0, pos = 0;
        while ((pos = r1.out.find(",ok,", pos)) != std::string::npos) {
            ++ok_rows;
            pos += 4;
        }
        CHECK(ok_rows == 9);
    }
    SECTION("integer s rows are skipped for y3, not fatal") {
        auto r = run_cli("scan --family y3 --mu 1..2 --k 1..2 --s 2");
        CHECK(r.code == 0);
        std::size_t skipped = 0, pos = 0;
        while ((pos = r.out.find(",skipped,", pos)) != std::string::npos) {
            ++skipped;
            pos += 9;
        }
        CHECK(skipped == 4);
        CHECK(r.out.find(",ok,") == std::string::npos);
    }
    SECTION("thm2 grid in json format") {
        auto r = run_cli("scan --family thm2 --n -3..-1 --r 1/2,3/2,2 --format json");
        CHECK(r.code == 0);
        auto rows = nlohmann::json::parse(r.out);
        REQUIRE(rows.size() == 9);
        for (const auto& row : rows) {
            CHECK(row.at("status") == "ok");
            CHECK(row.at("checks").at("pvi_residual_zero") == true);
            CHECK(row.at("checks").at("quadratic_residual_zero") == true);
        }
    }
    SECTION("--out writes the same bytes as stdout") {
        std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/pvi_scan_test.csv";
        auto direct = run_cli("scan --family y1 --mu 1..2 --k 1..2 --s 2");
        auto filed = run_cli("scan --family y1 --mu 1..2 --k 1..2 --s 2 --out " + path);
        CHECK(filed.code == 0);
        std::ifstream in(path, std::ios::binary);
        std::string contents((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
        CHECK(contents == direct.out);
        std::remove(path.c_str());
    }
    SECTION("missing axes and empty grids are usage errors") {
        CHECK(run_cli("scan --family y1 --mu 1..3 --s 2").code == 2);
        CHECK(run_cli("scan --family thm2 --n 3..1 --r 2").code == 2);
        CHECK(run_cli("scan --family y1 --mu 1..3 --k 1..3 --s 2 --out /nonexistent/x.csv")
                  .code == 2);
    }
}
