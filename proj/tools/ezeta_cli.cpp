#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ezeta/cli_config.hpp"
#include "ezeta/identities.hpp"
#include "ezeta/report.hpp"
#include "ezeta/zeta.hpp"
#include "json.hpp"

using namespace ezeta;
using nlohmann::ordered_json;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

std::string g15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string human(Complex z) {
    if (z.imag() == 0.0) return g15(z.real());
    return g15(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + g15(std::fabs(z.imag())) + "i";
}

ordered_json jnum(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

ordered_json jcomplex(Complex z) { return {{"re", jnum(z.real())}, {"im", jnum(z.imag())}}; }

void write_out(const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream f(*path, std::ios::binary);
    if (!f) throw DomainError("cannot write '" + *path + "'");
    f << text;
}

// eval

struct EvalArgs {
    std::string function;
    double s = 0.0, s_im = 0.0, x = 1.0, x_im = 0.0, a = 0.5, alpha_re = 1.0, alpha_im = 0.0;
    unsigned m = 0;
    bool x_set = false;
    std::string format = "human";
};

ZetaValue nominal(Complex v, Method method) {
    return {v, 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(v)), method};
}

ZetaValue run_eval(const EvalArgs& e) {
    const Complex s(e.s, e.s_im);
    const std::string& f = e.function;
    if (f == "zeta") return e.x_set ? hurwitz_zeta(s, e.x) : riemann_zeta(s);
    if (f == "zeta-e") return zeta_e(s, e.x);
    if (f == "lambda") return dirichlet_lambda(s);
    if (f == "beta") return dirichlet_beta(s);
    if (f == "lerch-e") {
        if (!e.x_set) throw DomainError("lerch-e: requires --x with 0 < x < 1");
        const Complex v = lerch_e(s, e.x);
        return nominal(v, s.real() >= 6.0 ? Method::DirectSeries : Method::FunctionalEquation);
    }
    if (f == "euler-poly") return nominal(euler_polynomial(e.m)(e.x), Method::ClosedForm);
    if (f == "bernoulli-poly") return nominal(bernoulli_polynomial(e.m)(e.x), Method::ClosedForm);
    if (f == "apostol-bernoulli")
        return nominal(apostol_bernoulli(e.m, e.a, Complex(e.alpha_re, e.alpha_im)), Method::ClosedForm);
    if (f == "f-transcendental") {
        if (!e.x_set) throw DomainError("f-transcendental: requires --x with |x| < 0.95");
        return nominal(transcendental_f(Complex(e.x, e.x_im), s), Method::DirectSeries);
    }
    throw DomainError("unknown function '" + f + "'");
}

int cmd_eval(const EvalArgs& e) {
    const ZetaValue v = run_eval(e);
    if (e.format == "json") {
        ordered_json j = {{"value", jcomplex(v.value)}, {"est_error", jnum(v.est_error)}, {"method", to_string(v.method)}};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "value      " << human(v.value) << '\n'
                  << "est_error  " << g15(v.est_error) << '\n'
                  << "method     " << to_string(v.method) << '\n';
    }
    return 0;
}

// check

void print_report_human(const IdentityCheckReport& r, std::ostream& os) {
    if (r.status == IdentityStatus::Disputed)
        os << "DISPUTED: " << r.id << " is reported for information; its verdict does not affect the exit code\n";
    os << r.id << "  " << r.point.to_string() << '\n';
    os << "  lhs      " << human(r.lhs_value) << '\n';
    os << "  rhs      " << human(r.rhs_value) << '\n';
    if (r.exact) os << "  exact    lhs " << (r.exact->lhs.empty() ? "-" : r.exact->lhs) << "  rhs "
                    << (r.exact->rhs.empty() ? "-" : r.exact->rhs) << '\n';
    os << "  abs_err  " << g15(r.abs_err) << "  (tol " << g15(r.tol_abs) << ")\n";
    if (r.rel_err) os << "  rel_err  " << g15(*r.rel_err) << "  (tol " << g15(r.tol_rel) << ")\n";
    if (r.quad)
        os << "  quad     est " << g15(r.quad->est_error) << ", " << r.quad->evaluations << " evaluations, "
           << r.quad->subdivisions << " subdivisions" << (r.quad->converged ? "" : ", not converged") << '\n';
    for (const auto& [k, v] : r.aux) os << "  " << k << "  " << g15(v) << '\n';
    os << "  verdict  " << to_string(r.verdict) << (r.diagnostic.empty() ? "" : " (" + r.diagnostic + ")") << '\n';
}

int verdict_exit(const IdentityCheckReport& r) {
    if (r.status == IdentityStatus::Disputed) return 0;
    if (r.verdict == Verdict::Skipped) return exit_usage;
    return r.verdict == Verdict::Pass ? 0 : exit_fail;
}

double parse_value(const std::string& axis, const std::string& text) {
    const auto v = parse_axis_values(text);
    if (v.size() != 1) throw DomainError("--" + axis + " takes a single value");
    return v.front();
}

int cmd_check(const std::string& id, const std::vector<std::string>& extras, const Tolerances& tol,
              const std::string& format) {
    const IdentitySpec* spec = find_identity(id);
    if (!spec) throw DomainError("unknown identity '" + id + "' (see the catalog command)");
    Point p = spec->defaults;
    for (std::size_t i = 0; i < extras.size(); ++i) {
        std::string key = extras[i];
        std::string val;
        if (key.rfind("--", 0) != 0) throw DomainError("unexpected argument '" + key + "'");
        key = key.substr(2);
        if (const auto eq = key.find('='); eq != std::string::npos) {
            val = key.substr(eq + 1);
            key = key.substr(0, eq);
        } else {
            if (i + 1 >= extras.size()) throw DomainError("--" + key + " needs a value");
            val = extras[++i];
        }
        std::replace(key.begin(), key.end(), '-', '_');
        if (!spec->domain.axis(key)) {
            std::string names;
            for (const auto& a : spec->domain.axes) names += (names.empty() ? "" : ", ") + a.name;
            throw DomainError(id + " has no axis '" + key + "' (axes: " + (names.empty() ? "none" : names) + ")");
        }
        p.set(key, parse_value(key, val));
    }
    // keep axis order
    std::vector<std::pair<std::string, double>> ordered;
    for (const auto& a : spec->domain.axes) ordered.emplace_back(a.name, p.get(a.name));
    const IdentityCheckReport r = check_identity(*spec, Point(std::move(ordered)), tol);
    if (format == "json") std::cout << report_to_json(r).dump() << '\n';
    else if (format == "csv") std::cout << reports_to_csv({r});
    else print_report_human(r, std::cout);
    return verdict_exit(r);
}

// suite

int cmd_suite(CliConfig cfg, const std::optional<std::string>& config_path) {
    if (config_path) cfg = merge(load_config(*config_path), cfg);
    SuiteOptions opts;
    opts.filter = cfg.filter.value_or("");
    opts.grids = cfg.grids;
    opts.tol = {cfg.tol_abs, cfg.tol_rel};
    opts.jobs = cfg.jobs.value_or(std::max(1u, std::thread::hardware_concurrency()));
    const OutputFormat fmt = cfg.format.value_or(OutputFormat::Human);

    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult res = run_suite(opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (fmt == OutputFormat::Json) write_out(cfg.out, reports_to_jsonl(res.reports));
    else if (fmt == OutputFormat::Csv) write_out(cfg.out, reports_to_csv(res.reports));
    else if (cfg.out) write_out(cfg.out, reports_to_jsonl(res.reports));

    if (fmt == OutputFormat::Human || cfg.out) {
        std::ostream& os = fmt == OutputFormat::Human ? std::cout : std::cerr;
        for (const auto& r : res.reports)
            if (r.verdict != Verdict::Pass && r.status == IdentityStatus::Asserted)
                os << to_string(r.verdict) << "  " << r.id << "  " << r.point.to_string() << "  " << r.diagnostic
                   << '\n';
        const auto& c = res.counts;
        os << "pass " << c.pass << "  fail " << c.fail << "  skipped " << c.skipped << "  disputed " << c.disputed
           << " (" << c.disputed_fail << " failing)\n";
        if (!cfg.deterministic.value_or(true)) os << "elapsed " << g15(secs) << " s\n";
    }
    return res.counts.fail > 0 ? exit_fail : 0;
}

// table

struct Row {
    unsigned index;
    std::string closed_form;
    double closed = 0.0;
    double numeric = 0.0;
    bool agree = false;
};

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

// c * pi^k as text
std::string pi_multiple(const Rational& c, unsigned k) {
    std::ostringstream os;
    const BigInt n = numerator(c), d = denominator(c);
    if (n == -1) os << '-';
    else if (n != 1) os << n << '*';
    os << "pi";
    if (k != 1) os << '^' << k;
    if (d != 1) os << '/' << d;
    return os.str();
}

bool close(double a, double b, double rel) { return std::fabs(a - b) <= rel * std::max(1.0, std::fabs(b)); }

std::vector<Row> build_table(const std::string& kind, unsigned max) {
    std::vector<Row> rows;
    if (kind == "lambda-even") {
        for (unsigned m = 1; m <= max; ++m) {
            const Rational c = Rational(m % 2 == 0 ? 1 : -1) * euler_poly_at_zero(2 * m - 1) /
                               Rational(4 * factorial(2 * m - 1));
            Row r{m, pi_multiple(c, 2 * m)};
            r.closed = to_double(c) * std::pow(pi, 2.0 * m);
            r.numeric = dirichlet_lambda(2.0 * m).value.real();
            r.agree = close(r.closed, r.numeric, 1e-12);
            rows.push_back(r);
        }
    } else if (kind == "beta-odd") {
        for (unsigned m = 0; m <= max; ++m) {
            const Rational c = Rational(m % 2 == 0 ? 1 : -1) * Rational(euler_number(2 * m)) /
                               Rational(BigInt(1) << (2 * m + 2)) / Rational(factorial(2 * m));
            Row r{m, pi_multiple(c, 2 * m + 1)};
            r.closed = to_double(c) * std::pow(pi, 2.0 * m + 1.0);
            r.numeric = dirichlet_beta(2.0 * m + 1.0).value.real();
            r.agree = close(r.closed, r.numeric, 1e-11);
            rows.push_back(r);
        }
    } else if (kind == "euler-numbers") {
        for (unsigned m = 0; m <= max; ++m) {
            const BigInt e = euler_number(m);
            Row r{m, e.str()};
            r.closed = e.convert_to<double>();
            r.numeric = std::ldexp(euler_polynomial(m)(0.5), static_cast<int>(m));
            r.agree = close(r.closed, r.numeric, 1e-12);
            rows.push_back(r);
        }
    } else if (kind == "euler-at-zero") {
        for (unsigned m = 0; m <= max; ++m) {
            const Rational e = euler_poly_at_zero(m);
            Row r{m, rational_str(e)};
            r.closed = to_double(e);
            // E_m(1) = -E_m(0) for m >= 1
            const double at1 = 2.0 * zeta_e(-1.0 * m, 1.0).value.real();
            r.numeric = m == 0 ? at1 : -at1;
            r.agree = std::fabs(r.closed - r.numeric) <= 1e-10 * std::max(1.0, std::fabs(r.closed));
            rows.push_back(r);
        }
    } else {
        throw DomainError("table kind must be lambda-even, beta-odd, euler-numbers or euler-at-zero");
    }
    return rows;
}

int cmd_table(const std::string& kind, unsigned max, const std::string& format) {
    if (max > 30) throw DomainError("table: --max must be at most 30");
    const auto rows = build_table(kind, max);
    const char* index_name = kind == "lambda-even" || kind == "beta-odd" ? "m" : "n";
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows)
            arr.push_back({{index_name, r.index},
                           {"closed_form", r.closed_form},
                           {"closed_value", jnum(r.closed)},
                           {"numeric", jnum(r.numeric)},
                           {"agree", r.agree}});
        std::cout << ordered_json{{"kind", kind}, {"rows", arr}}.dump() << '\n';
    } else {
        std::cout << index_name << "  closed_form  closed_value  numeric  agree\n";
        for (const auto& r : rows)
            std::cout << r.index << "  " << r.closed_form << "  " << g15(r.closed) << "  " << g15(r.numeric) << "  "
                      << (r.agree ? "yes" : "NO") << '\n';
    }
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.agree;
    return ok ? 0 : exit_fail;
}

int cmd_catalog(const std::string& format) {
    if (format == "json") {
        std::cout << catalog_to_json().dump(2) << '\n';
        return 0;
    }
    for (const auto& s : catalog()) {
        std::string axes;
        for (const auto& a : s.domain.axes) axes += (axes.empty() ? "" : ",") + a.name;
        std::cout << s.id << "  " << to_string(s.status) << "  [" << axes << "]  " << s.domain.enumerate().size()
                  << " points\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler-type zeta functions and identity checks"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Evaluate a function");
    eval->add_option("function", ev.function, "zeta, zeta-e, lambda, beta, lerch-e, euler-poly, bernoulli-poly, "
                                              "apostol-bernoulli, f-transcendental")
        ->required();
    eval->add_option("--s", ev.s, "real part of s");
    eval->add_option("--s-im", ev.s_im, "imaginary part of s");
    auto* xopt = eval->add_option("--x", ev.x, "real argument");
    eval->add_option("--x-im", ev.x_im, "imaginary part of x (f-transcendental)");
    eval->add_option("--m", ev.m, "polynomial degree");
    eval->add_option("--a", ev.a, "Apostol-Bernoulli argument");
    eval->add_option("--alpha-re", ev.alpha_re, "Apostol-Bernoulli alpha, real part");
    eval->add_option("--alpha-im", ev.alpha_im, "Apostol-Bernoulli alpha, imaginary part");
    eval->add_option("--format", ev.format, "human or json")->check(CLI::IsMember({"human", "json"}));

    std::string check_id, check_format = "human";
    std::optional<double> check_abs, check_rel;
    auto* check = app.add_subcommand("check", "Check one identity at one point; axes as --name value");
    check->allow_extras();
    check->add_option("id", check_id, "identity id")->required();
    check->add_option("--tol-abs", check_abs, "absolute tolerance");
    check->add_option("--tol-rel", check_rel, "relative tolerance");
    check->add_option("--format", check_format, "human, json or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));

    CliConfig flags;
    std::optional<std::string> config_path;
    std::vector<std::string> grid_args;
    std::string suite_format;
    bool no_det = false;
    auto* suite = app.add_subcommand("suite", "Run the identity catalog over its grids");
    suite->add_option("--filter", flags.filter, "id glob, comma-separated alternatives");
    suite->add_option("--grid", grid_args, "axis=start:stop:step or axis=v1,v2,...")->take_all();
    suite->add_option("--tol-abs", flags.tol_abs, "absolute tolerance override");
    suite->add_option("--tol-rel", flags.tol_rel, "relative tolerance override");
    suite->add_option("--format", suite_format, "human, json (JSON lines) or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    suite->add_option("--out", flags.out, "report file");
    suite->add_option("--jobs", flags.jobs, "worker threads (default: available cores)")->check(CLI::PositiveNumber);
    suite->add_option("--config", config_path, "key=value config file; flags override it");
    suite->add_flag("--no-deterministic", no_det, "print wall-clock timing in the summary");

    std::string table_kind, table_format = "human";
    unsigned table_max = 6;
    auto* table = app.add_subcommand("table", "Special-value tables");
    table->add_option("kind", table_kind, "lambda-even, beta-odd, euler-numbers, euler-at-zero")->required();
    table->add_option("--max", table_max, "largest index (at most 30)");
    table->add_option("--format", table_format, "human or json")->check(CLI::IsMember({"human", "json"}));

    std::string catalog_format = "human";
    auto* cat = app.add_subcommand("catalog", "List the identity catalog");
    cat->add_option("--format", catalog_format, "human or json")->check(CLI::IsMember({"human", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*eval) {
            ev.x_set = xopt->count() > 0;
            return cmd_eval(ev);
        }
        if (*check) return cmd_check(check_id, check->remaining(), {check_abs, check_rel}, check_format);
        if (*suite) {
            for (const auto& g : grid_args) {
                auto [axis, values] = parse_grid_override(g);
                flags.grids[axis] = std::move(values);
            }
            if (!suite_format.empty()) flags.format = parse_format(suite_format);
            if (no_det) flags.deterministic = false;
            return cmd_suite(flags, config_path);
        }
        if (*table) return cmd_table(table_kind, table_max, table_format);
        if (*cat) return cmd_catalog(catalog_format);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
