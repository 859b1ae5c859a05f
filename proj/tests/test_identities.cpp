#include <cmath>
#include <set>

#include "doctest.h"
#include "ezeta/cli_config.hpp"
#include "ezeta/identities.hpp"
#include "ezeta/report.hpp"
#include "ezeta/zeta.hpp"

using namespace ezeta;

namespace {

const double catalan = 0.915965594177219015054603514932;
const double zeta3 = 1.2020569031595942853997381615114;

bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

const IdentitySpec& spec(const std::string& id) {
    const IdentitySpec* s = find_identity(id);
    REQUIRE(s != nullptr);
    return *s;
}

IdentityCheckReport check_at(const std::string& id, std::vector<std::pair<std::string, double>> coords) {
    return check_identity(spec(id), Point(std::move(coords)));
}

}  // namespace

TEST_SUITE("identities") {
    TEST_CASE("fourier coefficient closed forms") {
        for (unsigned k : {0u, 1u, 4u}) {
            CHECK(near(rhs_fourier_coefficient(FourierKind::Sin, 0.0, k), 1.0 / (pi * (2.0 * k + 1.0)), 1e-15));
            CHECK(near(rhs_fourier_coefficient(FourierKind::Sin, -1.0, k), 0.0, 1e-15));
        }
        CHECK(near(rhs_fourier_coefficient(FourierKind::Cos, -1.0, 0), -1.0 / (pi * pi), 1e-15));
        CHECK(near(rhs_fourier_coefficient(FourierKind::Cos, 0.0, 3), 0.0, 1e-15));
        CHECK_THROWS_AS(rhs_fourier_coefficient(FourierKind::Sin, 0.5, 0), DomainError);
    }

    TEST_CASE("product integral closed forms") {
        CHECK(near(rhs_product_integral(0.0, 0.0, false), 0.25, 1e-15));
        CHECK(near(rhs_product_integral(0.0, 0.0, true), 0.25, 1e-15));
        CHECK(near(rhs_product_integral(-1.0, -1.0, false), 1.0 / 48.0, 1e-15));
        CHECK(near(rhs_product_integral(-1.0, -1.0, true), -1.0 / 48.0, 1e-15));
        // symmetric in (s, s')
        CHECK(near(rhs_product_integral(-0.5, -2.5, false), rhs_product_integral(-2.5, -0.5, false), 1e-15));
    }

    TEST_CASE("euler transform and moments") {
        CHECK(near(rhs_euler_transform(1, -2.0), -1.0 / 12.0, 1e-15));
        CHECK(near(rhs_euler_transform(2, 0.0), 0.0, 1e-15));
        for (double s : {0.0, -0.5, -2.5})
            CHECK(near(rhs_moment(0, s), rhs_euler_transform(1, s), 1e-14));
        CHECK(near(rhs_moment(1, -1.0), 1.0 / 24.0, 1e-15));
        CHECK(rhs_moment_euler(0, 1) == Rational(1));
        CHECK_THROWS_AS(rhs_euler_transform(0, -1.0), DomainError);
    }

    TEST_CASE("exponential and secant transforms") {
        CHECK(near(rhs_exp_transform(0.25, 0.0), std::expm1(0.5 * pi) / pi, 1e-14));
        CHECK(near(rhs_exp_transform(0.0, -1.0), 0.0, 1e-15));
        // zeta_E(-2,x) = E_2(x)/2 = (x^2 - x)/2
        IntegrandSpec f;
        f.evaluator = [](double x) { return Complex(std::exp(0.4 * pi * x) * 0.5 * (x * x - x)); };
        const auto q = integrate_unit(f, 1e-14, 0.0);
        CHECK(near(rhs_exp_transform(0.2, -2.0), q.value, 1e-13));
        CHECK_THROWS_AS(rhs_exp_transform(0.5, 0.0), DomainError);
        CHECK(near(rhs_secant_transform(-1.0), -2.0 * catalan / (pi * pi), 1e-14));
    }

    TEST_CASE("beta-even series terms") {
        const auto b = rhs_beta_even_series(1, 3);
        REQUIRE(b.terms == 3);
        CHECK(b.term_values[0] == doctest::Approx(-std::pow(pi, 4) / 96.0).epsilon(1e-14));
        CHECK(b.sum == doctest::Approx(b.term_values[0] + b.term_values[1] + b.term_values[2]));
        CHECK(b.last_term == doctest::Approx(std::fabs(b.term_values[2])));
    }

    TEST_CASE("rational argument and eisenstein") {
        CHECK(near(rhs_rational_argument(2.0, 1, 1), 0.25, 1e-13));
        for (unsigned m = 1; m <= 4; ++m)
            CHECK(near(rhs_rational_argument(m + 1.0, 1, 3), 0.5 * euler_polynomial(m)(1.0 / 3.0), 1e-12));
        CHECK(near(rhs_eisenstein(2.0, 1, 2), hurwitz_zeta(2.0, 0.25).value, 1e-12));
        CHECK(near(rhs_eisenstein(-1.0, 1, 2), -0.5 * bernoulli_polynomial(2)(0.25), 1e-13));
        CHECK(near(rhs_eisenstein(3.0, 2, 3), 7.0 * zeta3, 1e-12));
        CHECK_THROWS_AS(rhs_eisenstein(2.0, 2, 2), DomainError);
    }

    TEST_CASE("apostol multiplication") {
        for (unsigned m = 0; m <= 4; ++m)
            for (unsigned q : {2u, 3u, 5u})
                for (unsigned p = 1; p < q; ++p)
                    CHECK(rhs_apostol_multiplication(m, p, q).max_component_error < 1e-12);
        // alpha = -1 reduces to Euler polynomials: B_1(1/2, -1) = -E_0(1/2)/2
        CHECK(near(rhs_apostol_multiplication(0, 1, 2).lhs, -0.5, 1e-15));
    }

    TEST_CASE("abel oracle at nonpositive integers") {
        for (unsigned m = 0; m <= 4; ++m)
            for (double x : {0.2, 1.0 / 3.0, 0.5, 0.8})
                CHECK(near(lerch_neg_int_abel(m, x), lerch_e_neg_int(m, x), 1e-11 * (1.0 + std::pow(10.0, m))));
        // m = 0: e^{i pi x}/(1 - e^{2 pi i x}) = i/(2 sin(pi x))
        CHECK(near(lerch_neg_int_abel(0, 0.3), Complex(0.0, 0.5 / sinpi(0.3)), 1e-14));
    }

    TEST_CASE("check_identity examples") {
        const auto a = check_at("EULER-PROD", {{"m", 1}, {"n", 1}, {"route", 0}});
        CHECK(a.verdict == Verdict::Pass);
        REQUIRE(a.exact);
        CHECK(a.exact->lhs == "1/12");
        CHECK(a.exact->rhs == "1/12");
        CHECK(a.exact->equal);
        CHECK(a.abs_err == 0.0);

        const auto b = check_at("PROD-SAME", {{"s", 0}, {"sp", 0}});
        CHECK(b.verdict == Verdict::Pass);
        CHECK(near(b.rhs_value, 0.25, 1e-15));
        REQUIRE(b.quad);
        CHECK(b.quad->converged);

        const auto c = check_at("FOUR-SIN", {{"s", -1}, {"k", 3}});
        CHECK(c.verdict == Verdict::Pass);
        CHECK(std::abs(c.rhs_value) < 1e-15);
        CHECK_FALSE(c.rel_err.has_value());

        const auto d = check_at("CATALAN", {{"form", 0}});
        CHECK(d.verdict == Verdict::Pass);
        CHECK(near(d.lhs_value, catalan, 1e-9));
    }

    TEST_CASE("inadmissible points and evaluator failures") {
        CHECK_THROWS_AS(check_at("EULER-PROD", {{"m", 10}, {"n", 5}, {"route", 0}}), DomainError);
        CHECK_THROWS_AS(check_at("FOUR-SIN", {{"s", 0.5}, {"k", 0}}), DomainError);
        CHECK_THROWS_AS(check_at("FOUR-SIN", {{"s", -1}}), DomainError);
        CHECK_THROWS_AS(check_at("EULER-PROD", {{"m", 1.5}, {"n", 1}, {"route", 0}}), DomainError);

        IdentitySpec bad;
        bad.id = "BROKEN";
        bad.domain.axes = {{"s", {0.0}, false}};
        bad.lhs = [](const Point&, const EvalContext&) -> SideValue { throw PoleError("pole"); };
        bad.rhs = [](const Point&, const EvalContext&) { return SideValue(0.0); };
        const auto r = check_identity(bad, Point({{"s", 0.0}}));
        CHECK(r.verdict == Verdict::Skipped);
        CHECK(std::isnan(r.abs_err));
        CHECK(r.diagnostic.find("pole") != std::string::npos);
    }

    TEST_CASE("verdict rule") {
        IdentitySpec id;
        id.id = "T";
        id.domain.axes = {{"v", {0.0}, false}};
        id.tol_abs = 1e-8;
        id.tol_rel = 1e-7;
        id.rhs = [](const Point& p, const EvalContext&) { return SideValue(p.get("v")); };
        auto run = [&](double lhs, double rhs) {
            id.lhs = [lhs](const Point&, const EvalContext&) { return SideValue(lhs); };
            id.domain.axes[0].values = {rhs};
            return check_identity(id, Point({{"v", rhs}})).verdict;
        };
        CHECK(run(1e-9, 0.0) == Verdict::Pass);
        CHECK(run(1e-7, 0.0) == Verdict::Fail);
        // relative tolerance only above magnitude 1
        CHECK(run(1e6 + 1e-2, 1e6) == Verdict::Pass);
        CHECK(run(0.5 + 5e-8, 0.5) == Verdict::Fail);
        CHECK(run(std::nan(""), 0.0) == Verdict::Fail);
        CHECK(run(0.5, 0.0) == Verdict::Fail);
        CHECK(check_identity(id, Point({{"v", 0.0}}), {1.0, 0.0}).verdict == Verdict::Pass);
        CHECK_THROWS_AS(check_identity(id, Point({{"v", 0.0}}), {-1.0, 0.0}), DomainError);

        id.lhs = [](const Point&, const EvalContext&) { return SideValue::from_exact(Rational(1, 3)); };
        id.rhs = [](const Point&, const EvalContext&) { return SideValue::from_exact(Rational(1, 3) + Rational(1, 1000000000000)); };
        const auto r = check_identity(id, Point({{"v", 0.0}}));
        CHECK(r.verdict == Verdict::Fail);
        CHECK_FALSE(r.exact->equal);
    }

    TEST_CASE("catalog structure") {
        const auto& cat = catalog();
        REQUIRE(cat.size() >= 40);
        std::set<std::string> ids;
        for (std::size_t i = 0; i < cat.size(); ++i) {
            const auto& s = cat[i];
            CHECK(ids.insert(s.id).second);
            if (i > 0) CHECK(cat[i - 1].id < s.id);
            CHECK_FALSE(s.paper_ref.empty());
            CHECK(s.domain.admits(s.defaults));
            CHECK_FALSE(s.domain.enumerate().empty());
        }
        for (const char* d : {"BETA-EVEN", "EXP-SUM", "MUL-DIS", "EULER-FOURIER-COM"})
            CHECK(spec(d).status == IdentityStatus::Disputed);
        CHECK(find_identity("NOPE") == nullptr);
    }

    TEST_CASE("exact float path agrees with rational path") {
        const auto r = run_suite({"EULER-PROD,APOSTOL-MULT,BERNOULLI-EISEN", {}, {}, 2});
        unsigned quad_route = 0;
        for (const auto& rep : r.reports) {
            CHECK(rep.verdict == Verdict::Pass);
            if (rep.id == "EULER-PROD" && rep.point.get("route") == 1) {
                ++quad_route;
                CHECK(rep.abs_err < 1e-12);
            }
            if (rep.id != "EULER-PROD") CHECK(rep.abs_err < 1e-12);
        }
        CHECK(quad_route == 45);
    }

    TEST_CASE("suite filters and overrides") {
        const auto all = run_suite({"", {}, {}, 4});
        std::set<std::string> ids;
        for (const auto& r : all.reports) ids.insert(r.id);
        CHECK(ids.size() == catalog().size());
        CHECK(all.counts.fail == 0);
        CHECK(all.counts.skipped == 0);
        CHECK(all.counts.pass + all.counts.fail + all.counts.skipped + all.counts.disputed == all.reports.size());

        const auto eul = run_suite({"EULER-*", {}, {}, 1});
        for (const auto& r : eul.reports) CHECK(r.id.rfind("EULER-", 0) == 0);
        CHECK(eul.reports.size() > 0);

        const auto prod = run_suite({"PROD-*", {{"s", parse_axis_values("-3:0:0.5")}}, {}, 2});
        for (const auto& r : prod.reports) CHECK(r.point.get("s") <= 0.0);
        CHECK(prod.reports.size() == 170);

        CHECK_THROWS_AS(run_suite({"NOTHING-*", {}, {}, 1}), DomainError);
        CHECK_THROWS_AS(run_suite({"PROD-SAME", {{"zz", {1.0}}}, {}, 1}), DomainError);
    }

    TEST_CASE("suite is deterministic across thread counts") {
        const std::string a = reports_to_jsonl(run_suite({"FOUR-*,RATIONAL-ARG,EXP-SUM", {}, {}, 1}).reports);
        const std::string b = reports_to_jsonl(run_suite({"FOUR-*,RATIONAL-ARG,EXP-SUM", {}, {}, 4}).reports);
        CHECK(a == b);
    }

    TEST_CASE("json round trip") {
        const auto r = run_suite({"EULER-PROD,CATALAN,BETA-EVEN,APOSTOL-MULT,EXP-SUM", {}, {}, 2});
        for (const auto& rep : r.reports) {
            const auto j = report_to_json(rep);
            const auto back = report_from_json(j);
            CHECK(report_to_json(back).dump() == j.dump());
            CHECK(back.point == rep.point);
            CHECK(back.verdict == rep.verdict);
            CHECK(back.quad == rep.quad);
            CHECK(back.exact == rep.exact);
            CHECK(back.aux == rep.aux);
        }
        IdentityCheckReport nanrep;
        nanrep.id = "X";
        nanrep.abs_err = std::nan("");
        nanrep.lhs_value = Complex(INFINITY, -INFINITY);
        const auto j = report_to_json(nanrep);
        CHECK(j["abs_err"] == "nan");
        const auto back = report_from_json(j);
        CHECK(std::isnan(back.abs_err));
        CHECK(std::isinf(back.lhs_value.imag()));
        CHECK_THROWS_AS(report_from_json(nlohmann::ordered_json{{"id", 3}}), DomainError);
    }

    TEST_CASE("csv quoting") {
        IdentityCheckReport r;
        r.id = "A";
        r.point = Point({{"s", -1}, {"k", 0}});
        r.verdict = Verdict::Fail;
        r.diagnostic = "says \"no\", twice";
        const std::string csv = reports_to_csv({r});
        CHECK(csv.rfind("id,status,point,", 0) == 0);
        CHECK(csv.find("\"says \"\"no\"\", twice\"") != std::string::npos);
        CHECK(csv.find("s=-1;k=0") != std::string::npos);
        CHECK(csv.find("\r\n") != std::string::npos);
    }

    TEST_CASE("catalog json") {
        const auto j = catalog_to_json();
        REQUIRE(j.is_array());
        CHECK(j.size() == catalog().size());
        CHECK(j[0].contains("domain"));
        CHECK(j[0]["domain"].contains("axes"));
    }

    TEST_CASE("id globbing") {
        CHECK(id_matches("", "ANY"));
        CHECK(id_matches("EULER-*", "EULER-PROD"));
        CHECK_FALSE(id_matches("EULER-*", "EXP-EULER"));
        CHECK(id_matches("*EULER*", "EXP-EULER"));
        CHECK(id_matches("FOUR-???", "FOUR-SIN"));
        CHECK(id_matches("X,FOUR-COS", "FOUR-COS"));
        CHECK_FALSE(id_matches("FOUR", "FOUR-COS"));
    }

    TEST_CASE("grid parsing") {
        CHECK(parse_axis_values("-3:0:0.5") == std::vector<double>{-3, -2.5, -2, -1.5, -1, -0.5, 0});
        CHECK(parse_axis_values("0:-1:-0.25").size() == 5);
        CHECK(parse_axis_values("1, 2,+3") == std::vector<double>{1, 2, 3});
        CHECK(parse_axis_values("0.1:0.3:0.1").size() == 3);
        CHECK_THROWS_AS(parse_axis_values("0:1:0"), DomainError);
        CHECK_THROWS_AS(parse_axis_values("0:1:-1"), DomainError);
        CHECK_THROWS_AS(parse_axis_values("a,b"), DomainError);
        CHECK_THROWS_AS(parse_axis_values("1:2"), DomainError);
        CHECK(Point({{"s", -1.5}, {"k", 2}}).to_string() == "s=-1.5,k=2");
        CHECK(Point({{"s", -2}}) < Point({{"s", -1}}));
    }

    TEST_CASE("config files") {
        const CliConfig c = parse_config("# run\ntol_abs = 1e-9\nformat=csv\njobs=3\nfilter=PROD-*\n"
                                         "deterministic=off\ngrid.s=-1:0:0.5\n\n");
        CHECK(*c.tol_abs == 1e-9);
        CHECK(*c.format == OutputFormat::Csv);
        CHECK(*c.jobs == 3u);
        CHECK(*c.filter == "PROD-*");
        CHECK_FALSE(*c.deterministic);
        CHECK(c.grids.at("s").size() == 3);
        CHECK_THROWS_AS(parse_config("colour=blue\n"), DomainError);
        CHECK_THROWS_AS(parse_config("jobs=0\n"), DomainError);
        CHECK_THROWS_AS(parse_config("tol_abs\n"), DomainError);

        CliConfig over;
        over.jobs = 8;
        over.grids["sp"] = {0.0};
        const CliConfig m = merge(c, over);
        CHECK(*m.jobs == 8u);
        CHECK(*m.format == OutputFormat::Csv);
        CHECK(m.grids.size() == 2);
        const auto [axis, values] = parse_grid_override("sp=-1,0");
        CHECK(axis == "sp");
        CHECK(values.size() == 2);
        CHECK_THROWS_AS(parse_grid_override("=1"), DomainError);
    }
}
