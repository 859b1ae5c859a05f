#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(EZETA_CLI) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    Run r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "ezeta_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("eval") {
        auto r = cli("eval lambda --s 2 --format json");
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["value"]["re"].get<double>() == doctest::Approx(1.2337005501361698).epsilon(1e-14));
        CHECK(j["est_error"].get<double>() >= 0.0);

        r = cli("eval zeta-e --s 0 --x 0.7 --format json");
        REQUIRE(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["value"]["re"].get<double>() == doctest::Approx(0.5).epsilon(1e-15));

        r = cli("eval zeta-e --s 1 --x 0.3 --format json");
        REQUIRE(r.code == 0);
        j = nlohmann::json::parse(r.out);
        CHECK(j["method"] == "hurwitz-difference-perturbed");
        CHECK(j["value"]["re"].get<double>() == doctest::Approx(2.8253219418828676).epsilon(1e-12));

        r = cli("eval lambda --s 2");
        CHECK(r.code == 0);
        CHECK(r.out.find("1.23370055013617") != std::string::npos);

        CHECK(cli("eval zeta --s 1").code == 2);
        CHECK(cli("eval zeta-e --s 2 --x -1").code == 2);
        CHECK(cli("eval nothing --s 2").code == 2);
        CHECK(cli("eval").code == 2);
    }

    TEST_CASE("check") {
        auto r = cli("check EULER-PROD --m 1 --n 1");
        CHECK(r.code == 0);
        CHECK(r.out.find("1/12") != std::string::npos);
        CHECK(r.out.find("pass") != std::string::npos);

        r = cli("check CATALAN --format json");
        CHECK(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["verdict"] == "pass");
        CHECK(j["rhs"]["re"].get<double>() == doctest::Approx(0.915965594177219).epsilon(1e-14));

        r = cli("check EXP-SUM --m 3 --alpha 1 --n 1");
        CHECK(r.code == 0);
        CHECK(r.out.find("DISPUTED") != std::string::npos);
        CHECK(r.out.find("lhs") != std::string::npos);
        CHECK(r.out.find("rhs") != std::string::npos);

        CHECK(cli("check FOUR-SIN --s -1.5 --k 2").code == 0);
        CHECK(cli("check FOUR-SIN --s=-1.5 --k=2 --format csv").code == 0);
        CHECK(cli("check NO-SUCH-ID").code == 2);
        CHECK(cli("check FOUR-SIN --s 0.5").code == 2);
        CHECK(cli("check FOUR-SIN --q 1").code == 2);
        CHECK(cli("check EULER-PROD --m 1 --n 1 --tol-abs -1").code == 2);
    }

    TEST_CASE("suite") {
        auto r = cli("suite --filter \"PROD-*\" --grid s=-3:0:0.5 --jobs 2");
        CHECK(r.code == 0);
        CHECK(r.out.find("pass 170  fail 0  skipped 0  disputed 0") != std::string::npos);

        const auto csv = scratch("r.csv");
        r = cli("suite --filter \"EULER-PROD\" --format csv --out " + csv.string());
        CHECK(r.code == 0);
        const std::string text = slurp(csv);
        CHECK(text.rfind("id,status,point,lhs_re,lhs_im,rhs_re,rhs_im,abs_err", 0) == 0);

        const auto jl = scratch("r.jsonl");
        r = cli("suite --filter \"EXP-SUM\" --format json --out " + jl.string());
        CHECK(r.code == 0);
        std::istringstream lines(slurp(jl));
        std::string line;
        int n = 0;
        while (std::getline(lines, line)) {
            const auto j = nlohmann::json::parse(line);
            CHECK(j["status"] == "disputed");
            ++n;
        }
        CHECK(n == 24);

        CHECK(cli("suite --filter NOTHING").code == 2);
        CHECK(cli("suite --grid zz=1").code == 2);
        CHECK(cli("suite --jobs 0").code == 2);
    }

    TEST_CASE("suite reports are byte-identical across runs") {
        const auto a = scratch("det_a.jsonl"), b = scratch("det_b.jsonl");
        REQUIRE(cli("suite --jobs 4 --format json --out " + a.string()).code == 0);
        REQUIRE(cli("suite --jobs 3 --format json --out " + b.string()).code == 0);
        const std::string ta = slurp(a);
        CHECK(!ta.empty());
        CHECK(ta == slurp(b));
    }

    TEST_CASE("config file") {
        const auto cfg = scratch("run.cfg");
        {
            std::ofstream f(cfg);
            f << "# subset\nfilter = SQUARE*\ngrid.s = -1,0\njobs = 2\n";
        }
        auto r = cli("suite --config " + cfg.string());
        CHECK(r.code == 0);
        CHECK(r.out.find("pass 4  fail 0") != std::string::npos);
        r = cli("suite --config " + cfg.string() + " --filter SQUARE");
        CHECK(r.out.find("pass 2  fail 0") != std::string::npos);
        {
            std::ofstream f(cfg);
            f << "colour = blue\n";
        }
        CHECK(cli("suite --config " + cfg.string()).code == 2);
        CHECK(cli("suite --config /nonexistent/run.cfg").code == 2);
    }

    TEST_CASE("tables") {
        auto r = cli("table lambda-even --max 3");
        CHECK(r.code == 0);
        CHECK(r.out.find("pi^2/8") != std::string::npos);
        CHECK(r.out.find("pi^4/96") != std::string::npos);
        CHECK(r.out.find("pi^6/960") != std::string::npos);
        CHECK(r.out.find("NO") == std::string::npos);

        r = cli("table euler-numbers --max 6 --format json");
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        std::vector<std::string> got;
        for (const auto& row : j["rows"]) got.push_back(row["closed_form"]);
        CHECK(got == std::vector<std::string>{"1", "0", "-1", "0", "5", "0", "-61"});

        r = cli("table beta-odd --max 2");
        CHECK(r.code == 0);
        CHECK(r.out.find("pi/4") != std::string::npos);
        CHECK(r.out.find("pi^3/32") != std::string::npos);
        CHECK(r.out.find("5*pi^5/1536") != std::string::npos);

        CHECK(cli("table euler-at-zero --max 8").code == 0);
        CHECK(cli("table lambda-even --max 31").code == 2);
        CHECK(cli("table nothing").code == 2);
    }

    TEST_CASE("catalog") {
        const auto r = cli("catalog --format json");
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.size() >= 40);
        CHECK(cli("catalog").code == 0);
    }
}
