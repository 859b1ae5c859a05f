#include "ezeta/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace ezeta {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights at xgk[1], xgk[3], xgk[5], xgk[7]
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a = 0, b = 0;
    // tanh-sinh clustering requested at this end; theta > 0 adds a tail correction
    bool de_left = false, de_right = false;
    double theta_left = 0, theta_right = 0;
    Complex value;
    double err = 0;
    double resabs = 0;
};

struct Evaluator {
    const std::function<Complex(double)>& f;
    unsigned long count = 0;
    Complex operator()(double x) {
        ++count;
        return f(x);
    }
};

void gauss_kronrod(Panel& p, Evaluator& f) {
    const double c = 0.5 * (p.a + p.b);
    const double hw = 0.5 * (p.b - p.a);
    const Complex fc = f(c);
    Complex k = wgk[7] * fc;
    Complex g = wg[3] * fc;
    double resabs = wgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = hw * xgk[j];
        const Complex f1 = f(c - dx), f2 = f(c + dx);
        k += wgk[j] * (f1 + f2);
        resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) g += wg[j / 2] * (f1 + f2);
    }
    p.value = k * hw;
    p.err = std::abs(k - g) * hw;
    p.resabs = resabs * std::fabs(hw);
}

void tanh_sinh(Panel& p, Evaluator& f, double target) {
    const double hw = 0.5 * (p.b - p.a);
    const double c = 0.5 * (p.a + p.b);
    const double min_left = std::max(1e-300, 4.0 * eps * std::fabs(p.a));
    const double min_right = std::max(1e-300, 4.0 * eps * std::fabs(p.b));
    constexpr int max_level = 8;

    Complex sum = 0.0;
    double sumabs = 0.0;
    double last_left = 0, last_right = 0;  // outermost distances sampled
    Complex f_left = 0.0, f_right = 0.0;

    // contribution of the nodes at +-t
    auto add_pair = [&](double t, bool& live_left, bool& live_right) {
        const double u = 0.5 * pi * std::sinh(t);
        const double dn = 1.0 / (std::exp(u) * std::cosh(u));
        const double d = hw * dn;
        const double w = 0.5 * pi * std::cosh(t) * dn * (2.0 - dn) * hw;
        Complex s = 0.0;
        if (live_right && d >= min_right) {
            const double x = p.b - d;
            const Complex v = f(x);
            s += w * v;
            sumabs += w * std::abs(v);
            if (last_right == 0 || p.b - x < last_right) {
                last_right = p.b - x;
                f_right = v;
            }
        } else {
            live_right = false;
        }
        if (live_left && d >= min_left) {
            const double x = p.a + d;
            const Complex v = f(x);
            s += w * v;
            sumabs += w * std::abs(v);
            if (last_left == 0 || x - p.a < last_left) {
                last_left = x - p.a;
                f_left = v;
            }
        } else {
            live_left = false;
        }
        return s;
    };

    const Complex f0 = f(c);
    sum = 0.5 * pi * hw * f0;
    sumabs = 0.5 * pi * std::fabs(hw) * std::abs(f0);
    {
        bool l = true, r = true;
        for (int j = 1; l || r; ++j) sum += add_pair(j, l, r);
    }
    Complex prev = sum;
    double h = 1.0;
    double diff = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        bool l = true, r = true;
        for (int j = 1; l || r; j += 2) sum += add_pair(j * h, l, r);
        const Complex cur = sum * h;
        diff = std::abs(cur - prev);
        prev = cur;
        if (level >= 3 && (diff <= target || diff <= 4.0 * eps * sumabs * h)) break;
    }
    Complex value = prev;
    if (p.theta_left > 0) value += f_left * last_left / p.theta_left;
    if (p.theta_right > 0) value += f_right * last_right / p.theta_right;
    p.value = value;
    p.err = diff;
    p.resabs = sumabs * h;
}

struct Breakpoint {
    double x;
    bool singular;
    double theta;
};

QuadratureResult integrate_panels(const IntegrandSpec& spec, std::vector<Breakpoint> pts, double abs_tol,
                                  double rel_tol) {
    if (!(abs_tol > 0.0 || rel_tol > 0.0)) throw DomainError("integrate: abs_tol or rel_tol must be positive");
    spec.validate();
    std::sort(pts.begin(), pts.end(), [](const Breakpoint& l, const Breakpoint& r) { return l.x < r.x; });

    Evaluator f{spec.evaluator};
    const double base_tol = std::max(abs_tol, 0.0);
    auto evaluate = [&](Panel& p) {
        if (p.de_left || p.de_right) {
            tanh_sinh(p, f, 0.1 * std::max(base_tol, 1e-300) * (p.b - p.a));
        } else {
            gauss_kronrod(p, f);
        }
        if (!std::isfinite(p.err) || !std::isfinite(p.value.real()) || !std::isfinite(p.value.imag()))
            p.err = std::numeric_limits<double>::infinity();
    };

    std::vector<Panel> panels;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Panel p;
        p.a = pts[i].x;
        p.b = pts[i + 1].x;
        p.de_left = pts[i].singular;
        p.de_right = pts[i + 1].singular;
        p.theta_left = pts[i].singular ? pts[i].theta : 0.0;
        p.theta_right = pts[i + 1].singular ? pts[i + 1].theta : 0.0;
        evaluate(p);
        panels.push_back(p);
    }

    unsigned subdivisions = 0;
    auto totals = [&](Complex& value, double& err) {
        value = 0.0;
        err = 0.0;
        for (const auto& p : panels) {
            value += p.value;
            err += p.err;
        }
    };
    Complex value;
    double err;
    totals(value, err);
    while (subdivisions < max_subdivisions) {
        const double tol = std::max(abs_tol, rel_tol * std::abs(value));
        if (err <= tol) break;
        std::size_t worst = panels.size();
        for (std::size_t i = 0; i < panels.size(); ++i) {
            const Panel& p = panels[i];
            if (p.b - p.a < 1e-13) continue;
            if (std::isfinite(p.err) && p.err <= 50.0 * eps * p.resabs) continue;
            if (worst == panels.size() || p.err > panels[worst].err) worst = i;
        }
        if (worst == panels.size()) break;
        Panel parent = panels[worst];
        const double mid = 0.5 * (parent.a + parent.b);
        Panel lhs, rhs;
        lhs.a = parent.a;
        lhs.b = mid;
        lhs.de_left = parent.de_left;
        lhs.theta_left = parent.theta_left;
        rhs.a = mid;
        rhs.b = parent.b;
        rhs.de_right = parent.de_right;
        rhs.theta_right = parent.theta_right;
        evaluate(lhs);
        evaluate(rhs);
        panels[worst] = lhs;
        panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1, rhs);
        ++subdivisions;
        totals(value, err);
    }

    QuadratureResult out;
    out.value = value;
    out.est_error = err;
    out.evaluations = f.count;
    out.subdivisions = subdivisions;
    out.converged = std::isfinite(err) && err <= std::max(abs_tol, rel_tol * std::abs(value));
    return out;
}

std::vector<Breakpoint> base_breakpoints(const IntegrandSpec& spec) {
    std::vector<Breakpoint> pts;
    pts.push_back({0.0, spec.left.singular, spec.left.singular ? spec.left.theta : 0.0});
    for (double x : spec.split_points) pts.push_back({x, true, 0.0});
    pts.push_back({1.0, spec.right.singular, spec.right.singular ? spec.right.theta : 0.0});
    return pts;
}

}  // namespace

void IntegrandSpec::validate() const {
    if (!evaluator) throw DomainError("IntegrandSpec: missing evaluator");
    double prev = 0.0;
    for (double x : split_points) {
        if (!(x > prev && x < 1.0)) throw DomainError("IntegrandSpec: split points must be sorted, distinct, in (0,1)");
        prev = x;
    }
    if (left.singular && !(left.theta > 0.0)) throw DomainError("IntegrandSpec: endpoint exponent theta must be > 0");
    if (right.singular && !(right.theta > 0.0)) throw DomainError("IntegrandSpec: endpoint exponent theta must be > 0");
}

QuadratureResult integrate_unit(const IntegrandSpec& f, double abs_tol, double rel_tol) {
    return integrate_panels(f, base_breakpoints(f), abs_tol, rel_tol);
}

QuadratureResult integrate_oscillatory(const IntegrandSpec& f, unsigned frequency_hint, double abs_tol,
                                       double rel_tol) {
    if (frequency_hint < 1) throw DomainError("integrate_oscillatory: frequency_hint must be >= 1");
    auto pts = base_breakpoints(f);
    const unsigned n = 4 * frequency_hint;
    for (unsigned k = 1; k < n; ++k) {
        const double x = static_cast<double>(k) / n;
        const bool taken = std::any_of(pts.begin(), pts.end(), [&](const Breakpoint& b) {
            return std::fabs(b.x - x) < 1e-12;
        });
        if (!taken) pts.push_back({x, false, 0.0});
    }
    return integrate_panels(f, std::move(pts), abs_tol, rel_tol);
}

}  // namespace ezeta
