#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "ezeta/identities.hpp"

namespace ezeta {

std::string to_string(IdentityStatus s) { return s == IdentityStatus::Asserted ? "asserted" : "disputed"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
    }
    return "skipped";
}

IdentityStatus parse_status(const std::string& s) {
    if (s == "asserted") return IdentityStatus::Asserted;
    if (s == "disputed") return IdentityStatus::Disputed;
    throw DomainError("unknown status '" + s + "'");
}

Verdict parse_verdict(const std::string& s) {
    if (s == "pass") return Verdict::Pass;
    if (s == "fail") return Verdict::Fail;
    if (s == "skipped") return Verdict::Skipped;
    throw DomainError("unknown verdict '" + s + "'");
}

namespace {

std::string rational_text(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

}  // namespace

IdentityCheckReport check_identity(const IdentitySpec& spec, const Point& point, const Tolerances& tol) {
    if (!spec.domain.admits(point))
        throw DomainError(spec.id + ": point " + point.to_string() + " is outside the domain (" +
                          (spec.domain.constraint_text.empty() ? "axis mismatch" : spec.domain.constraint_text) + ")");

    IdentityCheckReport r;
    r.id = spec.id;
    r.status = spec.status;
    r.point = point;
    r.tol_abs = tol.abs.value_or(spec.tol_abs);
    r.tol_rel = tol.rel.value_or(spec.tol_rel);
    if (!(r.tol_abs >= 0.0) || !(r.tol_rel >= 0.0)) throw DomainError("tolerances must be nonnegative");

    EvalContext ctx;
    ctx.quad_abs_tol = std::max(0.01 * r.tol_abs, 1e-15);

    SideValue lhs, rhs;
    try {
        lhs = spec.lhs(point, ctx);
        rhs = spec.rhs(point, ctx);
    } catch (const std::exception& e) {
        r.verdict = Verdict::Skipped;
        r.diagnostic = std::string("evaluation failed: ") + e.what();
        r.abs_err = std::nan("");
        return r;
    }

    r.lhs_value = lhs.value;
    r.rhs_value = rhs.value;
    r.abs_err = std::abs(lhs.value - rhs.value);
    const double mag = std::abs(rhs.value);
    if (mag > 0.0) r.rel_err = r.abs_err / mag;
    r.aux = lhs.aux;
    r.aux.insert(r.aux.end(), rhs.aux.begin(), rhs.aux.end());

    double quad_est = 0.0;
    for (const SideValue* side : {&lhs, &rhs}) {
        if (!side->quad) continue;
        if (!r.quad) r.quad = QuadMeta{};
        r.quad->est_error += side->quad->est_error;
        r.quad->evaluations += side->quad->evaluations;
        r.quad->subdivisions += side->quad->subdivisions;
        r.quad->converged = r.quad->converged && side->quad->converged;
        quad_est += side->quad->est_error;
    }

    if (lhs.exact || rhs.exact) {
        ExactMeta m;
        if (lhs.exact) m.lhs = rational_text(*lhs.exact);
        if (rhs.exact) m.rhs = rational_text(*rhs.exact);
        m.equal = lhs.exact && rhs.exact && *lhs.exact == *rhs.exact;
        r.exact = m;
        if (lhs.exact && rhs.exact) {
            r.verdict = m.equal ? Verdict::Pass : Verdict::Fail;
            if (!m.equal) r.diagnostic = "exact values differ";
            return r;
        }
    }

    if (!finite(lhs.value) || !finite(rhs.value)) {
        r.verdict = Verdict::Fail;
        r.diagnostic = "non-finite value";
        return r;
    }
    if (r.quad && !r.quad->converged && quad_est > r.tol_abs) {
        r.verdict = Verdict::Fail;
        r.diagnostic = "quadrature did not converge (estimate " + fmt(quad_est) + ")";
        return r;
    }

    const bool abs_ok = r.abs_err <= r.tol_abs + std::min(quad_est, r.tol_abs);
    const bool rel_ok = mag > 1.0 && r.rel_err && *r.rel_err <= r.tol_rel;
    r.verdict = (abs_ok || rel_ok) ? Verdict::Pass : Verdict::Fail;
    if (r.verdict == Verdict::Fail)
        r.diagnostic = "abs_err " + fmt(r.abs_err) + " exceeds tolerance " + fmt(r.tol_abs);
    return r;
}

namespace {

bool glob(const char* p, const char* s) {
    for (; *p; ++p, ++s) {
        if (*p == '*') {
            for (const char* t = s;; ++t) {
                if (glob(p + 1, t)) return true;
                if (!*t) return false;
            }
        }
        if (!*s || (*p != '?' && *p != *s)) return false;
    }
    return !*s;
}

}  // namespace

bool id_matches(const std::string& pattern, const std::string& id) {
    if (pattern.empty()) return true;
    std::stringstream ss(pattern);
    std::string alt;
    while (std::getline(ss, alt, ','))
        if (!alt.empty() && glob(alt.c_str(), id.c_str())) return true;
    return false;
}

SuiteResult run_suite(const SuiteOptions& opts) {
    struct Task {
        const IdentitySpec* spec;
        Point point;
    };
    std::vector<Task> tasks;
    std::set<std::string> used;
    bool any = false;
    for (const auto& spec : catalog()) {
        if (!id_matches(opts.filter, spec.id)) continue;
        any = true;
        GridSpec g = spec.domain;
        for (auto& a : g.axes) {
            const auto it = opts.grids.find(a.name);
            if (it == opts.grids.end()) continue;
            used.insert(a.name);
            a.values = it->second;
        }
        std::vector<Point> pts;
        try {
            pts = g.enumerate();
        } catch (const DomainError&) {
            continue;
        }
        for (auto& p : pts) tasks.push_back({&spec, std::move(p)});
    }
    if (!any) throw DomainError("filter '" + opts.filter + "' selects no identity");
    for (const auto& [name, values] : opts.grids)
        if (!used.count(name)) throw DomainError("grid override '" + name + "' names no axis of a selected identity");

    SuiteResult out;
    out.reports.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
            out.reports[i] = check_identity(*tasks[i].spec, tasks[i].point, opts.tol);
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(tasks.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::stable_sort(out.reports.begin(), out.reports.end(), [](const auto& a, const auto& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.point < b.point;
    });
    for (const auto& r : out.reports) {
        if (r.status == IdentityStatus::Disputed) {
            ++out.counts.disputed;
            if (r.verdict == Verdict::Fail) ++out.counts.disputed_fail;
            continue;
        }
        if (r.verdict == Verdict::Pass) ++out.counts.pass;
        else if (r.verdict == Verdict::Fail) ++out.counts.fail;
        else ++out.counts.skipped;
    }
    return out;
}

}  // namespace ezeta
