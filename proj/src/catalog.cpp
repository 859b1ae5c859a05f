#include <algorithm>
#include <cmath>

#include "ezeta/identities.hpp"
#include "ezeta/zeta.hpp"

namespace ezeta {

namespace {

using Coord = std::vector<double>;

Coord range(double start, double stop, double step) { return parse_axis_values(
    format_double(start) + ":" + format_double(stop) + ":" + format_double(step)); }

Coord ints(int a, int b) {
    Coord out;
    for (int i = a; i <= b; ++i) out.push_back(i);
    return out;
}

Axis real_axis(std::string name, Coord v) { return {std::move(name), std::move(v), false}; }
Axis int_axis(std::string name, Coord v) { return {std::move(name), std::move(v), true}; }

bool is_int(double v) { return v == std::floor(v); }

// e^{i pi t}
Complex expi_pi(double t) { return {cospi(t), sinpi(t)}; }

double fact(unsigned n) { return to_double(Rational(factorial(n))); }

Complex ze(double s, double x) { return zeta_e(s, x).value; }

// x^{-s} type behaviour at an endpoint for noninteger s <= 0
EndpointHint zeta_end(std::initializer_list<double> ss) {
    EndpointHint h;
    double theta = 0.0;
    for (double s : ss) {
        if (is_int(s)) continue;
        const double t = 1.0 - s;
        theta = h.singular ? std::min(theta, t) : t;
        h.singular = true;
    }
    h.theta = h.singular ? theta : 1.0;
    return h;
}

SideValue quad_side(std::function<Complex(double)> f, const EvalContext& ctx, unsigned hint,
                    EndpointHint left = {}, EndpointHint right = {}, std::vector<double> splits = {}) {
    IntegrandSpec spec;
    spec.evaluator = std::move(f);
    spec.left = left;
    spec.right = right;
    spec.split_points = std::move(splits);
    return SideValue::from_quad(integrate_oscillatory(spec, std::max(hint, 1u), ctx.quad_abs_tol));
}

SideValue exact(const Rational& r) { return SideValue::from_exact(r); }

struct Builder {
    std::vector<IdentitySpec> out;

    IdentitySpec& add(std::string id, std::string ref, GridSpec grid, SideEvaluator lhs, SideEvaluator rhs) {
        IdentitySpec s;
        s.id = std::move(id);
        s.paper_ref = std::move(ref);
        s.domain = std::move(grid);
        s.lhs = std::move(lhs);
        s.rhs = std::move(rhs);
        s.defaults = s.domain.enumerate().front();
        out.push_back(std::move(s));
        return out.back();
    }
};

GridSpec grid(std::vector<Axis> axes, std::function<bool(const Point&)> c = {}, std::string text = {}) {
    return GridSpec{std::move(axes), std::move(c), std::move(text)};
}

const Coord s_quarter = range(0.0, -4.0, -0.25);
const Coord s_half3 = range(0.0, -3.0, -0.5);
const Coord s_half4 = range(0.0, -4.0, -0.5);
const Coord t_grid = {0.05, 0.15, 0.25, 0.35, 0.45};
const Coord x_tenths = {0.1, 0.3, 0.5, 0.7, 0.9};

auto nonpositive(const char* axis) {
    return [axis](const Point& p) { return p.get(axis) <= 0.0; };
}

void fourier_layer(Builder& b) {
    for (auto kind : {FourierKind::Sin, FourierKind::Cos}) {
        const bool is_sin = kind == FourierKind::Sin;
        b.add(is_sin ? "FOUR-SIN" : "FOUR-COS",
              is_sin ? "int_0^1 sin((2k+1) pi x) zeta_E(s,x) dx = pi^(s-1) (2k+1)^(s-1) Gamma(1-s) cos(pi s/2)"
                     : "int_0^1 cos((2k+1) pi x) zeta_E(s,x) dx = pi^(s-1) (2k+1)^(s-1) Gamma(1-s) sin(pi s/2)",
              grid({real_axis("s", s_quarter), int_axis("k", {0, 1, 2, 5})}, nonpositive("s"), "s <= 0"),
              [is_sin](const Point& p, const EvalContext& c) {
                  const double s = p.get("s");
                  const unsigned k = p.get_uint("k");
                  const double w = 2.0 * k + 1.0;
                  return quad_side(
                      [=](double x) {
                          const double t = std::fmod(w * x, 2.0);
                          return (is_sin ? sinpi(t) : cospi(t)) * ze(s, x);
                      },
                      c, 2 * k + 1, zeta_end({s}));
              },
              [kind](const Point& p, const EvalContext&) {
                  return SideValue(rhs_fourier_coefficient(kind, p.get("s"), p.get_uint("k")));
              })
            .tol_abs = 1e-9;
    }

    b.add("REFLECT-REWRITE",
          "pi^s (2k+1)^(s-1) / (2 Gamma(s)) * csc(pi s/2) [kind 0] or sec(pi s/2) [kind 1] equals the pole-free "
          "pi^(s-1) (2k+1)^(s-1) Gamma(1-s) cos(pi s/2) [kind 0] or sin(pi s/2) [kind 1], noninteger s",
          grid({int_axis("kind", {0, 1}), real_axis("s", {-0.25, -0.5, -1.5, -2.75, -3.5}),
                int_axis("k", {0, 1, 5})},
               [](const Point& p) { return p.get("s") <= 0.0 && !is_int(p.get("s")); }, "s <= 0, s not an integer"),
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s");
              const double w = 2.0 * p.get_uint("k") + 1.0;
              const double trig = p.get_uint("kind") == 0 ? sinpi(0.5 * s) : cospi(0.5 * s);
              return SideValue(std::pow(pi, s) * std::pow(w, s - 1.0) / (2.0 * ezeta::gamma(s) * trig));
          },
          [](const Point& p, const EvalContext&) {
              const auto kind = p.get_uint("kind") == 0 ? FourierKind::Sin : FourierKind::Cos;
              return SideValue(rhs_fourier_coefficient(kind, p.get("s"), p.get_uint("k")));
          })
        .tol_abs = 1e-12;

    for (bool is_sin : {true, false}) {
        b.add(is_sin ? "SIN-POW" : "COS-POW",
              is_sin ? "int_0^1 sin^(2n-1)(pi x) zeta_E(s,x) dx = Gamma(1-s)/(pi^(1-s) 2^(2n-2)) cos(pi s/2) "
                       "sum_{k<n} (-1)^k C(2n-1,n-k-1) / (2k+1)^(1-s)"
                     : "int_0^1 cos^(2n-1)(pi x) zeta_E(s,x) dx = Gamma(1-s)/(pi^(1-s) 2^(2n-2)) sin(pi s/2) "
                       "sum_{k<n} C(2n-1,n-k-1) / (2k+1)^(1-s)",
              grid({int_axis("n", {1, 2, 3}), real_axis("s", {0.0, -1.5, -3.0})},
                   [](const Point& p) { return p.get("n") >= 1 && p.get("s") <= 0.0; }, "n >= 1, s <= 0"),
              [is_sin](const Point& p, const EvalContext& c) {
                  const double s = p.get("s");
                  const unsigned n = p.get_uint("n");
                  return quad_side(
                      [=](double x) {
                          const double t = is_sin ? sinpi(x) : cospi(x);
                          return std::pow(t, 2.0 * n - 1.0) * ze(s, x);
                      },
                      c, 2 * n - 1, zeta_end({s}));
              },
              [is_sin](const Point& p, const EvalContext&) {
                  const double s = p.get("s");
                  const unsigned n = p.get_uint("n");
                  double sum = 0.0;
                  for (unsigned k = 0; k < n; ++k) {
                      const double sign = (is_sin && k % 2 == 1) ? -1.0 : 1.0;
                      sum += sign * to_double(Rational(binomial(2 * n - 1, n - k - 1))) *
                             std::pow(2.0 * k + 1.0, s - 1.0);
                  }
                  const double trig = is_sin ? cospi(0.5 * s) : sinpi(0.5 * s);
                  const Complex pref = ezeta::gamma(1.0 - s) * std::pow(pi, s - 1.0) / std::ldexp(1.0, 2 * n - 2);
                  return SideValue(pref * trig * sum);
              });
    }

    b.add("GEN-TRANSFORM",
          "int_0^1 f(x) zeta_E(s,x) dx = Gamma(1-s)/pi^(1-s) (sin(pi s/2) C + cos(pi s/2) S), and with "
          "zeta_E(s,1-x): (cos(pi s/2) S - sin(pi s/2) C); C, S = sums of odd-harmonic cosine/sine coefficients "
          "over (2n+1)^(1-s); f = sin(3 pi x) [f 0], cos(pi x) [f 1], x [f 2]",
          grid({int_axis("f", {0, 1, 2}), int_axis("side", {0, 1}), real_axis("s", {0.0, -0.5, -1.0, -2.5, -3.0})},
               nonpositive("s"), "s <= 0"),
          [](const Point& p, const EvalContext& c) {
              const unsigned f = p.get_uint("f");
              const bool refl = p.get_uint("side") == 1;
              const double s = p.get("s");
              auto g = [f](double x) {
                  if (f == 0) return sinpi(std::fmod(3.0 * x, 2.0));
                  if (f == 1) return cospi(x);
                  return x;
              };
              return quad_side([=](double x) { return g(x) * ze(s, refl ? 1.0 - x : x); }, c, f == 0 ? 3 : 1,
                               refl ? EndpointHint{} : zeta_end({s}), refl ? zeta_end({s}) : EndpointHint{});
          },
          [](const Point& p, const EvalContext&) {
              const unsigned f = p.get_uint("f");
              const bool refl = p.get_uint("side") == 1;
              const double s = p.get("s");
              double C = 0.0, S = 0.0;
              if (f == 0) S = std::pow(3.0, s - 1.0);
              if (f == 1) C = 1.0;
              if (f == 2) {
                  S = 2.0 / pi * dirichlet_lambda(2.0 - s).value.real();
                  C = -4.0 / (pi * pi) * dirichlet_lambda(3.0 - s).value.real();
              }
              const double ss = sinpi(0.5 * s), cs = cospi(0.5 * s);
              const double combo = refl ? cs * S - ss * C : ss * C + cs * S;
              return SideValue(ezeta::gamma(1.0 - s) * std::pow(pi, s - 1.0) * combo);
          });
}

SideValue product_quad(double s, double sp, bool refl, const EvalContext& c) {
    const EndpointHint both = zeta_end({s, sp});
    const EndpointHint only_s = zeta_end({s});
    const EndpointHint only_sp = zeta_end({sp});
    if (!refl) return quad_side([=](double x) { return ze(sp, x) * ze(s, x); }, c, 1, both);
    return quad_side([=](double x) { return ze(sp, x) * ze(s, 1.0 - x); }, c, 1, only_sp, only_s);
}

void product_layer(Builder& b) {
    for (bool refl : {false, true}) {
        b.add(refl ? "PROD-REFL" : "PROD-SAME",
              refl ? "int_0^1 zeta_E(s',x) zeta_E(s,1-x) dx = 2 Gamma(1-s) Gamma(1-s') pi^(s+s'-2) "
                     "lambda(2-s-s') cos(pi (s+s')/2)"
                   : "int_0^1 zeta_E(s',x) zeta_E(s,x) dx = 2 Gamma(1-s) Gamma(1-s') pi^(s+s'-2) "
                     "lambda(2-s-s') cos(pi (s-s')/2)",
              grid({real_axis("s", s_half3), real_axis("sp", s_half3)},
                   [](const Point& p) { return p.get("s") <= 0.0 && p.get("sp") <= 0.0; }, "s <= 0, s' <= 0"),
              [refl](const Point& p, const EvalContext& c) { return product_quad(p.get("s"), p.get("sp"), refl, c); },
              [refl](const Point& p, const EvalContext&) {
                  return SideValue(rhs_product_integral(p.get("s"), p.get("sp"), refl));
              });
    }

    b.add("PROD-BETAFORM",
          "int_0^1 zeta_E(s',x) zeta_E(s,x) dx = delta2(1-s-s') cos(pi (s-s')/2)/cos(pi (s+s')/2) "
          "B(1-s,1-s') lambda(s+s'-1) [form 0]; with zeta_E(s,1-x): delta2(1-s-s') B(1-s,1-s') "
          "lambda(s+s'-1) [form 1]",
          grid({int_axis("form", {0, 1}), real_axis("s", s_half3), real_axis("sp", s_half3)},
               [](const Point& p) {
                   const double u = p.get("s") + p.get("sp");
                   if (p.get("s") > 0.0 || p.get("sp") > 0.0) return false;
                   return !(is_int(u) && std::fmod(std::fabs(u), 2.0) == 1.0);
               },
               "s <= 0, s' <= 0, s + s' not an odd integer"),
          [](const Point& p, const EvalContext& c) {
              return product_quad(p.get("s"), p.get("sp"), p.get_uint("form") == 1, c);
          },
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s"), sp = p.get("sp");
              const double lam = dirichlet_lambda(s + sp - 1.0).value.real();
              Complex v = delta2(1.0 - s - sp) * beta_function(1.0 - s, 1.0 - sp) * lam;
              if (p.get_uint("form") == 0) v *= cospi(0.5 * (s - sp)) / cospi(0.5 * (s + sp));
              return SideValue(v);
          });

    b.add("LA-FT",
          "lambda(2-u) = -delta2(1-u) pi^(2-u) / (2 Gamma(2-u) cos(pi (2-u)/2)) lambda(u-1), u = s+s'",
          grid({real_axis("u", range(0.0, -6.0, -0.5))},
               [](const Point& p) {
                   const double u = p.get("u");
                   return u <= 0.0 && !(is_int(u) && std::fmod(std::fabs(u), 2.0) == 1.0);
               },
               "u <= 0, u not an odd integer"),
          [](const Point& p, const EvalContext&) { return SideValue(dirichlet_lambda(2.0 - p.get("u")).value); },
          [](const Point& p, const EvalContext&) {
              const double u = p.get("u");
              const Complex v = -delta2(1.0 - u) * std::pow(pi, 2.0 - u) /
                                (2.0 * ezeta::gamma(2.0 - u) * cospi(0.5 * (2.0 - u))) *
                                dirichlet_lambda(u - 1.0).value;
              return SideValue(v);
          })
        .tol_rel = 1e-10;

    for (bool refl : {false, true}) {
        b.add(refl ? "SQUARE-REFL" : "SQUARE",
              refl ? "int_0^1 zeta_E(s,x) zeta_E(s,1-x) dx = 2 Gamma(1-s)^2 pi^(2s-2) lambda(2-2s) cos(pi s)"
                   : "int_0^1 zeta_E(s,x)^2 dx = 2 Gamma(1-s)^2 pi^(2s-2) lambda(2-2s)",
              grid({real_axis("s", s_half3)}, nonpositive("s"), "s <= 0"),
              [refl](const Point& p, const EvalContext& c) { return product_quad(p.get("s"), p.get("s"), refl, c); },
              [refl](const Point& p, const EvalContext&) {
                  const double s = p.get("s");
                  const Complex g = ezeta::gamma(1.0 - s);
                  Complex v = 2.0 * g * g * std::pow(pi, 2.0 * s - 2.0) * dirichlet_lambda(2.0 - 2.0 * s).value;
                  if (refl) v *= cospi(s);
                  return SideValue(v);
              });
    }

    b.add("HALF-INT",
          "int_0^1 zeta_E(1/2-m,x)^2 dx = 2 ((2m)!/(2^(2m) m!))^2 lambda(2m+1) / pi^(2m)",
          grid({int_axis("m", {1, 2})}, [](const Point& p) { return p.get("m") >= 1; }, "m >= 1"),
          [](const Point& p, const EvalContext& c) {
              const double s = 0.5 - p.get_uint("m");
              return product_quad(s, s, false, c);
          },
          [](const Point& p, const EvalContext&) {
              const unsigned m = p.get_uint("m");
              const double g = fact(2 * m) / (std::ldexp(1.0, 2 * m) * fact(m));
              return SideValue(2.0 * g * g * dirichlet_lambda(2.0 * m + 1.0).value / std::pow(pi, 2.0 * m));
          });
}

void euler_layer(Builder& b) {
    b.add("EULER-TRANSFORM",
          "int_0^1 E_{m-1}(x) zeta_E(s,x) dx = (-1)^(m+1) 2 delta2(m-s) (m-1)! lambda(s-m) / (1-s)_m",
          grid({int_axis("m", ints(1, 5)), real_axis("s", {0.0, -0.5, -1.0, -2.0, -2.5, -3.0})},
               [](const Point& p) { return p.get("m") >= 1 && p.get("s") <= 0.0; }, "m >= 1, s <= 0"),
          [](const Point& p, const EvalContext& c) {
              const unsigned m = p.get_uint("m");
              const double s = p.get("s");
              const RationalPolynomial E = euler_polynomial(m - 1);
              return quad_side([=](double x) { return E(x) * ze(s, x); }, c, 1, zeta_end({s}));
          },
          [](const Point& p, const EvalContext&) {
              return SideValue(rhs_euler_transform(p.get_uint("m"), p.get("s")));
          });

    b.add("MEAN", "int_0^1 zeta_E(s,x) dx = 4 Gamma(1-s) pi^(s-2) cos(pi s/2) lambda(2-s)",
          grid({real_axis("s", s_half4)}, nonpositive("s"), "s <= 0"),
          [](const Point& p, const EvalContext& c) {
              const double s = p.get("s");
              return quad_side([=](double x) { return Complex(ze(s, x)); }, c, 1, zeta_end({s}));
          },
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s");
              return SideValue(4.0 * ezeta::gamma(1.0 - s) * std::pow(pi, s - 2.0) * cospi(0.5 * s) *
                               dirichlet_lambda(2.0 - s).value);
          });

    b.add("EULER-MEAN",
          "int_0^1 E_{2m}(x) dx = 8 (2m)! (-1)^m lambda(2m+2) / pi^(2m+2) [form 0] = "
          "-2 (2m)!/(2m+1)! E_{2m+1}(0) [form 1, exact]",
          grid({int_axis("form", {0, 1}), int_axis("m", ints(0, 6))}),
          [](const Point& p, const EvalContext&) {
              return exact(euler_polynomial(2 * p.get_uint("m")).integrate(0, 1));
          },
          [](const Point& p, const EvalContext&) {
              const unsigned m = p.get_uint("m");
              if (p.get_uint("form") == 1)
                  return exact(Rational(-2) / Rational(2 * m + 1) * euler_poly_at_zero(2 * m + 1));
              const double sign = (m % 2 == 0) ? 1.0 : -1.0;
              return SideValue(8.0 * fact(2 * m) * sign * dirichlet_lambda(2.0 * m + 2.0).value /
                               std::pow(pi, 2.0 * m + 2.0));
          });

    b.add("EULER-PROD",
          "int_0^1 E_m(x) E_n(x) dx = 2 (-1)^(n+1) m! n! / (m+n+1)! E_{m+n+1}(0) [route 0 exact, route 1 quadrature]",
          grid({int_axis("m", ints(0, 12)), int_axis("n", ints(0, 12)), int_axis("route", {0, 1})},
               [](const Point& p) {
                   const double mn = p.get("m") + p.get("n");
                   return p.get("m") >= 0 && p.get("n") >= 0 && mn <= (p.get("route") == 0 ? 12 : 8);
               },
               "m + n <= 12 (exact), m + n <= 8 (quadrature)"),
          [](const Point& p, const EvalContext& c) {
              const unsigned m = p.get_uint("m"), n = p.get_uint("n");
              const RationalPolynomial Em = euler_polynomial(m), En = euler_polynomial(n);
              if (p.get_uint("route") == 0) return exact((Em * En).integrate(0, 1));
              return quad_side([=](double x) { return Complex(Em(x) * En(x)); }, c, 1);
          },
          [](const Point& p, const EvalContext&) {
              const unsigned m = p.get_uint("m"), n = p.get_uint("n");
              const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
              const Rational v = Rational(2) * sign * Rational(factorial(m) * factorial(n)) /
                                 Rational(factorial(m + n + 1)) * euler_poly_at_zero(m + n + 1);
              return exact(v);
          });
    b.out.back().defaults = Point({{"m", 1}, {"n", 1}, {"route", 0}});

    b.add("MOMENTS",
          "int_0^1 x^n zeta_E(s,x) dx = sum_{j<=n} C(n,j) (-1)^j delta2(j-s+1) j! lambda(s-j-1)/(1-s)_{j+1} "
          "+ (-1)^n delta2(n-s+1) n! lambda(s-n-1)/(1-s)_{n+1}",
          grid({int_axis("n", ints(0, 4)), real_axis("s", {0.0, -0.5, -1.0, -1.5, -2.0, -3.0})}, nonpositive("s"),
               "s <= 0"),
          [](const Point& p, const EvalContext& c) {
              const unsigned n = p.get_uint("n");
              const double s = p.get("s");
              return quad_side([=](double x) { return std::pow(x, n) * ze(s, x); }, c, 1, zeta_end({s}));
          },
          [](const Point& p, const EvalContext&) { return SideValue(rhs_moment(p.get_uint("n"), p.get("s"))); });

    b.add("XN-EULER",
          "int_0^1 x^n E_{m-1}(x) dx = (-1)^m/m (sum_{j<=n} C(n,j)/C(m+j,j) E_{m+j}(0) + E_{m+n}(0)/C(m+n,n))",
          grid({int_axis("m", ints(1, 12)), int_axis("n", ints(0, 11))},
               [](const Point& p) { return p.get("m") >= 1 && p.get("m") + p.get("n") <= 12; }, "m >= 1, m + n <= 12"),
          [](const Point& p, const EvalContext&) {
              const unsigned m = p.get_uint("m"), n = p.get_uint("n");
              return exact((RationalPolynomial::monomial(n) * euler_polynomial(m - 1)).integrate(0, 1));
          },
          [](const Point& p, const EvalContext&) { return exact(rhs_moment_euler(p.get_uint("n"), p.get_uint("m"))); });

    b.add("REMARK-IDS",
          "sum_{j<=n} C(n,j) E_{j+1}(0)/(j+1) = -(E_{n+1}(0)+1)/(n+1) [which 1]; sum_{j<=n} C(n,j) "
          "E_{j+2}(0)/((j+1)(j+2)) = -(2 E_{n+2}(0) - n)/(2 (n+1)(n+2)) [which 2]",
          grid({int_axis("which", {1, 2}), int_axis("n", ints(0, 8))}),
          [](const Point& p, const EvalContext&) {
              const unsigned w = p.get_uint("which"), n = p.get_uint("n");
              Rational acc = 0;
              for (unsigned j = 0; j <= n; ++j) {
                  const Rational c(binomial(n, j));
                  if (w == 1) acc += c * euler_poly_at_zero(j + 1) / Rational(j + 1);
                  else acc += c * euler_poly_at_zero(j + 2) / Rational((j + 1) * (j + 2));
              }
              return exact(acc);
          },
          [](const Point& p, const EvalContext&) {
              const unsigned w = p.get_uint("which"), n = p.get_uint("n");
              if (w == 1) return exact(-(euler_poly_at_zero(n + 1) + 1) / Rational(n + 1));
              return exact(-(2 * euler_poly_at_zero(n + 2) - Rational(n)) / Rational(2 * (n + 1) * (n + 2)));
          });
}

// closed form of the exponential transform of E_m
Complex exp_euler_closed(unsigned m, double t) {
    double partial = 0.0;
    if (m >= 1) {
        for (unsigned r = 0; r <= (m - 1) / 2; ++r) {
            const double sign = (r % 2 == 0) ? 1.0 : -1.0;
            partial += sign * dirichlet_lambda(2.0 * r + 2.0).value.real() * std::pow(2.0 * t, 2.0 * r + 2.0);
        }
    }
    const double bracket = 0.5 * pi * t * std::tanh(pi * t) - partial;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign * 4.0 * (std::exp(2.0 * pi * t) + 1.0) * fact(m) / std::pow(2.0 * pi * t, m + 2.0) * bracket;
}

void exponential_layer(Builder& b) {
    b.add("EXP-TRANSFORM",
          "int_0^1 e^(2 pi t x) zeta_E(s,x) dx = 2 (e^(2 pi t) + 1) Gamma(1-s) pi^(s-2) Re(e^(i pi s/2) F(2 i t, s)), "
          "F(x,s) = sum_n lambda(n+2-s) x^n",
          grid({real_axis("t", t_grid), real_axis("s", {0.0, -0.5, -1.0, -2.0, -2.5, -3.0})},
               [](const Point& p) { return p.get("s") <= 0.0 && std::fabs(p.get("t")) <= 0.45; },
               "s <= 0, |t| <= 0.45"),
          [](const Point& p, const EvalContext& c) {
              const double t = p.get("t"), s = p.get("s");
              return quad_side([=](double x) { return std::exp(2.0 * pi * t * x) * ze(s, x); }, c, 1,
                               zeta_end({s}));
          },
          [](const Point& p, const EvalContext&) { return SideValue(rhs_exp_transform(p.get("t"), p.get("s"))); });

    b.add("EXP-EULER",
          "int_0^1 e^(2 pi t x) E_m(x) dx = (-1)^m 4 (e^(2 pi t)+1) m! / (2 pi t)^(m+2) (pi t/2 tanh(pi t) - "
          "sum_{r<=floor((m-1)/2)} (-1)^r lambda(2r+2) (2t)^(2r+2))",
          grid({int_axis("m", ints(0, 5)), real_axis("t", t_grid)},
               [](const Point& p) { return p.get("t") != 0.0 && std::fabs(p.get("t")) <= 0.45; },
               "0 < |t| <= 0.45"),
          [](const Point& p, const EvalContext& c) {
              const double t = p.get("t");
              const RationalPolynomial E = euler_polynomial(p.get_uint("m"));
              return quad_side([=](double x) { return std::exp(2.0 * pi * t * x) * E(x); }, c, 1);
          },
          [](const Point& p, const EvalContext&) { return SideValue(exp_euler_closed(p.get_uint("m"), p.get("t"))); });

    b.add("EXP-EULER-TANH",
          "(e^(2 pi t) - 1)/(2 pi t) = (e^(2 pi t) + 1) tanh(pi t)/(2 pi t), the m = 0 case of the E_m transform",
          grid({real_axis("t", t_grid)}, [](const Point& p) { return p.get("t") != 0.0; }, "t != 0"),
          [](const Point& p, const EvalContext&) {
              const double t = p.get("t");
              return SideValue(std::expm1(2.0 * pi * t) / (2.0 * pi * t));
          },
          [](const Point& p, const EvalContext&) { return SideValue(exp_euler_closed(0, p.get("t"))); })
        .tol_abs = 1e-12;
    b.out.back().tol_rel = 1e-12;
}

Complex sec_g(double s, double x) { return 0.5 * g_e(s, x) / cospi(x); }

void secant_layer(Builder& b) {
    b.add("SEC-TRANSFORM",
          "(1/2) int_0^1 G_E(s,x)/cos(pi x) dx = 2 Gamma(1-s) pi^(s-1) sin(pi s/2) beta(1-s), "
          "G_E(s,x) = zeta_E(s,x) - zeta_E(s,1-x)",
          grid({real_axis("s", s_half4)}, nonpositive("s"), "s <= 0"),
          [](const Point& p, const EvalContext& c) {
              const double s = p.get("s");
              return quad_side([=](double x) { return sec_g(s, x); }, c, 1, zeta_end({s}), zeta_end({s}), {0.5});
          },
          [](const Point& p, const EvalContext&) { return SideValue(rhs_secant_transform(p.get("s"))); });

    b.add("SEC-EULER", "int_0^1 sec(pi x) E_{2m-1}(x) dx = (-1)^m 4 (2m-1)! beta(2m) / pi^(2m)",
          grid({int_axis("m", {1, 2, 3})}, [](const Point& p) { return p.get("m") >= 1; }, "m >= 1"),
          [](const Point& p, const EvalContext& c) {
              const RationalPolynomial E = euler_polynomial(2 * p.get_uint("m") - 1);
              return quad_side([=](double x) { return Complex(E(x) / cospi(x)); }, c, 1, {}, {}, {0.5});
          },
          [](const Point& p, const EvalContext&) {
              const unsigned m = p.get_uint("m");
              const double sign = (m % 2 == 0) ? 1.0 : -1.0;
              return SideValue(sign * 4.0 * fact(2 * m - 1) * dirichlet_beta(2.0 * m).value / std::pow(pi, 2.0 * m));
          });

    b.add("CATALAN",
          "G = beta(2) = -(pi^2/4) int_0^1 G_E(-1,x)/cos(pi x) dx [form 0] = (pi^2/4) int_0^1 (1/2 - x)/cos(pi x) dx "
          "[form 1]; right side from the accelerated alternating series",
          grid({int_axis("form", {0, 1})}),
          [](const Point& p, const EvalContext& c) {
              const bool via_ge = p.get_uint("form") == 0;
              EvalContext inner = c;
              inner.quad_abs_tol = c.quad_abs_tol / (0.25 * pi * pi);
              SideValue v = quad_side(
                  [=](double x) {
                      if (via_ge) return Complex(g_e(-1.0, x) / cospi(x));
                      return Complex((0.5 - x) / cospi(x));
                  },
                  inner, 1, {}, {}, {0.5});
              const double scale = (via_ge ? -0.25 : 0.25) * pi * pi;
              v.value *= scale;
              v.est_error *= scale < 0 ? -scale : scale;
              v.quad->value *= scale;
              v.quad->est_error = v.est_error;
              return v;
          },
          [](const Point&, const EvalContext&) {
              return SideValue(dirichlet_beta_alternating(2.0, 40), 1e-16);
          })
        .tol_abs = 1e-9;

    b.add("BETA-EVEN",
          "beta(2m) = sum_{n>=1} (-1)^(n+m) pi^(2m+2n) E_{2n}/4 sum_{j=1..n} E_{2m+2j-1}(0) / ((2n-2j+1)! "
          "(2m+2j-1)!), truncated where the last term drops below 1e-8 or at n = 40",
          grid({int_axis("m", {1, 2, 3})}, [](const Point& p) { return p.get("m") >= 1; }, "m >= 1"),
          [](const Point& p, const EvalContext&) {
              const unsigned m = p.get_uint("m");
              const BetaEvenSeries full = rhs_beta_even_series(m, 40);
              unsigned used = full.terms;
              for (unsigned i = 0; i < full.term_values.size(); ++i) {
                  if (std::fabs(full.term_values[i]) < 1e-8) {
                      used = i + 1;
                      break;
                  }
              }
              double sum = 0.0;
              for (unsigned i = 0; i < used; ++i) sum += full.term_values[i];
              SideValue v(sum);
              v.aux = {{"terms", static_cast<double>(used)},
                       {"last_term", std::fabs(full.term_values[used - 1])},
                       {"first_term", full.term_values[0]},
                       {"second_term", full.term_values[1]}};
              return v;
          },
          [](const Point& p, const EvalContext&) { return SideValue(dirichlet_beta(2.0 * p.get_uint("m")).value); });
    b.out.back().tol_abs = 1e-6;
    b.out.back().status = IdentityStatus::Disputed;

    b.add("BETA-EVEN-INT", "beta(2m) = (-1)^m pi^(2m) / (4 (2m-1)!) int_0^1 sec(pi x) E_{2m-1}(x) dx",
          grid({int_axis("m", {1, 2, 3})}, [](const Point& p) { return p.get("m") >= 1; }, "m >= 1"),
          [](const Point& p, const EvalContext& c) {
              const unsigned m = p.get_uint("m");
              const double sign = (m % 2 == 0) ? 1.0 : -1.0;
              const double scale = sign * std::pow(pi, 2.0 * m) / (4.0 * fact(2 * m - 1));
              const RationalPolynomial E = euler_polynomial(2 * m - 1);
              EvalContext inner = c;
              inner.quad_abs_tol = c.quad_abs_tol / std::fabs(scale);
              SideValue v = quad_side([=](double x) { return Complex(E(x) / cospi(x)); }, inner, 1, {}, {}, {0.5});
              v.value *= scale;
              v.est_error *= std::fabs(scale);
              v.quad->value *= scale;
              v.quad->est_error = v.est_error;
              return v;
          },
          [](const Point& p, const EvalContext&) { return SideValue(dirichlet_beta(2.0 * p.get_uint("m")).value); });

    b.add("BETA-ODD", "beta(2m+1) = (-1)^m E_{2m} pi^(2m+1) / (2^(2m+2) (2m)!)",
          grid({int_axis("m", ints(0, 3))}),
          [](const Point& p, const EvalContext&) {
              const unsigned m = p.get_uint("m");
              const double sign = (m % 2 == 0) ? 1.0 : -1.0;
              return SideValue(sign * to_double(Rational(euler_number(2 * m))) * std::pow(pi, 2.0 * m + 1.0) /
                               (std::ldexp(1.0, 2 * m + 2) * fact(2 * m)));
          },
          [](const Point& p, const EvalContext&) {
              return SideValue(dirichlet_beta(2.0 * p.get_uint("m") + 1.0).value);
          })
        .tol_abs = 1e-11;
    b.out.back().tol_rel = 1e-11;
}

void lambda_layer(Builder& b) {
    b.add("LAMBDA-EVEN", "lambda(2m) = (-1)^m pi^(2m) E_{2m-1}(0) / (4 (2m-1)!)",
          grid({int_axis("m", ints(1, 6))}, [](const Point& p) { return p.get("m") >= 1; }, "m >= 1"),
          [](const Point& p, const EvalContext&) {
              return SideValue(dirichlet_lambda(2.0 * p.get_uint("m")).value);
          },
          [](const Point& p, const EvalContext&) {
              const unsigned m = p.get_uint("m");
              const double sign = (m % 2 == 0) ? 1.0 : -1.0;
              return SideValue(sign * std::pow(pi, 2.0 * m) * to_double(euler_poly_at_zero(2 * m - 1)) /
                               (4.0 * fact(2 * m - 1)));
          })
        .tol_abs = 1e-12;
    b.out.back().tol_rel = 1e-12;

    b.add("LAMBDA-NEG", "lambda(1-m) = (-1)^(m+1) E_{m-1}(0) / (2 delta2(m-1)), m >= 2",
          grid({int_axis("m", ints(2, 10))}, [](const Point& p) { return p.get("m") >= 2; }, "m >= 2"),
          [](const Point& p, const EvalContext&) {
              return SideValue(dirichlet_lambda(1.0 - p.get_uint("m")).value);
          },
          [](const Point& p, const EvalContext&) {
              const unsigned m = p.get_uint("m");
              const double sign = (m % 2 == 1) ? 1.0 : -1.0;
              return SideValue(sign * to_double(euler_poly_at_zero(m - 1)) / (2.0 * delta2(m - 1.0)));
          })
        .tol_rel = 1e-10;
}

Complex fe_forward(Complex s, Complex ell_x, Complex ell_1mx) {
    // zeta_E(1-s,x) from ell_{E,s}(x), ell_{E,s}(1-x)
    return ezeta::gamma(s) * std::exp(-s * std::log(pi)) *
           (std::exp(Complex(0.0, -0.5 * pi) * s) * ell_x - std::exp(Complex(0.0, 0.5 * pi) * s) * ell_1mx);
}

Complex ell_at(double s, unsigned p, unsigned q, bool via_hurwitz) {
    if (via_hurwitz) return lerch_e_rational(s, p, q);
    return lerch_e(s, static_cast<double>(p) / q);
}

void functional_layer(Builder& b) {
    b.add("FUNC-EQ-ROUNDTRIP",
          "zeta_E(1-s,x) = Gamma(s)/pi^s (e^(-i pi s/2) ell_{E,s}(x) - e^(i pi s/2) ell_{E,s}(1-x)) with "
          "ell_{E,s}(x) = Gamma(1-s)/(2 pi^(1-s)) (e^(i pi (1-s)/2) zeta_E(1-s,x) - e^(-i pi (1-s)/2) "
          "zeta_E(1-s,1-x)) [route 0] or from Hurwitz values at x = p/10 [route 1]",
          grid({int_axis("route", {0, 1}), real_axis("s", {-2.5, -1.5, -0.5, 0.25, 0.75, 1.5, 2.5, 3.5}),
                real_axis("x", x_tenths)},
               [](const Point& p) {
                   const double s = p.get("s"), x = p.get("x");
                   return !is_int(s) && x > 0.0 && x < 1.0 && (p.get("route") == 0 || is_int(std::round(10 * x)) &&
                                                                   std::fabs(10 * x - std::round(10 * x)) < 1e-12);
               },
               "s not an integer, 0 < x < 1, x a multiple of 1/10 for route 1"),
          [](const Point& p, const EvalContext&) {
              return SideValue(zeta_e(1.0 - p.get("s"), p.get("x")).value);
          },
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s"), x = p.get("x");
              const bool hz = p.get_uint("route") == 1;
              const unsigned num = static_cast<unsigned>(std::lround(10 * x));
              const Complex lx = hz ? ell_at(s, num, 10, true) : lerch_e(s, x);
              const Complex l1 = hz ? ell_at(s, 10 - num, 10, true) : lerch_e(s, 1.0 - x);
              return SideValue(fe_forward(s, lx, l1));
          })
        .tol_abs = 1e-10;
    b.out.back().tol_rel = 1e-10;

    b.add("FUNC-EQ-ASYM", "zeta_E(1-s) = -2 Gamma(s)/pi^s cos(pi s/2) lambda(s)",
          grid({real_axis("s", {-1.5, -0.5, 0.5, 1.5, 2.0, 2.5, 3.0, 4.5})},
               [](const Point& p) { return p.get("s") != 1.0 && !(p.get("s") <= 0 && is_int(p.get("s"))); },
               "s != 1, s not a nonpositive integer"),
          [](const Point& p, const EvalContext&) { return SideValue(zeta_e(1.0 - p.get("s"), 1.0).value); },
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s");
              return SideValue(-2.0 * ezeta::gamma(s) * std::pow(pi, -s) * cospi(0.5 * s) *
                               dirichlet_lambda(s).value);
          })
        .tol_abs = 1e-10;

    b.add("LERCH-HALF", "i beta(s) = ell_{E,s}(1/2) = i Gamma(1-s)/pi^(1-s) sin(pi (1-s)/2) zeta_E(1-s,1/2)",
          grid({real_axis("s", {-3.5, -2.0, -1.5, -0.5, 0.0, 0.5, 1.5, 2.5, 4.5})},
               [](const Point& p) { return !(p.get("s") >= 1.0 && is_int(p.get("s"))); },
               "s not a positive integer"),
          [](const Point& p, const EvalContext&) {
              return SideValue(Complex(0.0, 1.0) * dirichlet_beta(p.get("s")).value);
          },
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s");
              return SideValue(Complex(0.0, 1.0) * ezeta::gamma(1.0 - s) * std::pow(pi, s - 1.0) *
                               sinpi(0.5 * (1.0 - s)) * zeta_e(1.0 - s, 0.5).value);
          })
        .tol_abs = 1e-10;

    b.add("ZETA-LERCH-PROD",
          "i Gamma(1-s)/(2 pi^(1-s)) [e^(-i pi s/2) P(1-s,s') + e^(i pi s/2) R(1-s,s')] = pi^(s'-1) Gamma(1-s') "
          "e^(i pi (1-s')/2) lambda(1+s-s'), with P, R the closed forms of int zeta_E(s',x) zeta_E(1-s,x) and "
          "int zeta_E(s',x) zeta_E(1-s,1-x)",
          grid({real_axis("s", {-0.25, -0.75, -1.5, -2.5}), real_axis("sp", {0.0, -0.5, -1.0, -2.0})},
               [](const Point& p) { return !is_int(p.get("s")) && p.get("s") != p.get("sp"); },
               "s not an integer, s != s'"),
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s"), sp = p.get("sp");
              // product-integral closed forms continued to first argument 1-s > 0
              const double w = 1.0 + s - sp;
              const Complex common = 2.0 * ezeta::gamma(s) * ezeta::gamma(1.0 - sp) * std::pow(pi, -w) *
                                     dirichlet_lambda(w).value;
              const Complex P = common * cospi(0.5 * (1.0 - s - sp));
              const Complex R = common * cospi(0.5 * (1.0 - s + sp));
              const Complex pref = Complex(0.0, 1.0) * ezeta::gamma(1.0 - s) * std::pow(pi, s - 1.0) / 2.0;
              return SideValue(pref * (expi_pi(-0.5 * s) * P + expi_pi(0.5 * s) * R));
          },
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s"), sp = p.get("sp");
              return SideValue(std::pow(pi, sp - 1.0) * ezeta::gamma(1.0 - sp) * expi_pi(0.5 * (1.0 - sp)) *
                               dirichlet_lambda(1.0 + s - sp).value);
          })
        .tol_abs = 1e-10;
    b.out.back().tol_rel = 1e-10;

    b.add("ZETA-LERCH-BRACKET",
          "e^(-i pi s/2) cos(pi (1-s-s')/2) + e^(i pi s/2) cos(pi (1-s+s')/2) = e^(-i pi s'/2) sin(pi s)",
          grid({real_axis("s", range(0.0, -4.5, -0.5)), real_axis("sp", range(0.0, -4.5, -0.5))}),
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s"), sp = p.get("sp");
              return SideValue(expi_pi(-0.5 * s) * cospi(0.5 * (1.0 - s - sp)) +
                               expi_pi(0.5 * s) * cospi(0.5 * (1.0 - s + sp)));
          },
          [](const Point& p, const EvalContext&) {
              return SideValue(expi_pi(-0.5 * p.get("sp")) * sinpi(p.get("s")));
          })
        .tol_abs = 1e-12;
    b.out.back().tol_rel = 1e-12;
}

bool pq_ok(const Point& p, bool strict) {
    const double pp = p.get("p"), q = p.get("q");
    return pp >= 1 && (strict ? pp < q : pp <= q);
}

void rational_layer(Builder& b) {
    b.add("RATIONAL-ARG",
          "zeta_E(1-s,p/q) = 2 Gamma(s)/(2 q pi)^s sum_{r<q} cos(pi s/2 - (2r+1) pi p/q) zeta(s,(2r+1)/(2q)), "
          "s = s + i s_im",
          grid({int_axis("q", {1, 2, 3, 5}), int_axis("p", ints(1, 5)),
                real_axis("s", {-1.5, -0.5, 0.5, 1.5, 2.5, 3.0, 4.0}), real_axis("s_im", {0.0, 0.5})},
               [](const Point& p) {
                   const double s = p.get("s");
                   return pq_ok(p, false) && !(p.get("s_im") == 0.0 && (s == 1.0 || (s <= 0 && is_int(s))));
               },
               "1 <= p <= q, s != 1, s not a nonpositive integer"),
          [](const Point& p, const EvalContext&) {
              const Complex s(p.get("s"), p.get("s_im"));
              return SideValue(zeta_e(1.0 - s, static_cast<double>(p.get_uint("p")) / p.get_uint("q")).value);
          },
          [](const Point& p, const EvalContext&) {
              return SideValue(rhs_rational_argument(Complex(p.get("s"), p.get("s_im")), p.get_uint("p"),
                                                     p.get_uint("q")));
          })
        .tol_abs = 1e-9;
    b.out.back().tol_rel = 1e-9;

    b.add("EULER-RATIONAL",
          "E_m(p/q) = 4 m!/(2 q pi)^(m+1) sum_{r=1..q} sin((2r-1) pi p/q - m pi/2) zeta(m+1,(2r-1)/(2q))",
          grid({int_axis("m", ints(1, 4)), int_axis("q", {1, 2, 3, 5}), int_axis("p", ints(1, 5))},
               [](const Point& p) { return pq_ok(p, false) && p.get("m") >= 1; }, "m >= 1, 1 <= p <= q"),
          [](const Point& p, const EvalContext&) {
              return SideValue(
                  to_double(euler_polynomial(p.get_uint("m"))(Rational(p.get_uint("p"), p.get_uint("q")))));
          },
          [](const Point& p, const EvalContext&) {
              const unsigned m = p.get_uint("m"), pp = p.get_uint("p"), q = p.get_uint("q");
              Complex sum = 0.0;
              for (unsigned r = 1; r <= q; ++r) {
                  const double ph = static_cast<double>(((2ul * r - 1ul) * pp) % (2ul * q)) / q;
                  sum += sinpi(ph - 0.5 * m) * hurwitz_zeta(m + 1.0, (2.0 * r - 1.0) / (2.0 * q)).value;
              }
              return SideValue(4.0 * fact(m) / std::pow(2.0 * q * pi, m + 1.0) * sum);
          })
        .tol_abs = 1e-9;

    b.add("APOSTOL-MULT",
          "B_{m+1}(1/2, e^(2 pi i p/q)) = q^m sum_{r=1..q} e^(2 (r-1) pi i p/q) B_{m+1}((2r-1)/(2q))",
          grid({int_axis("m", ints(0, 4)), int_axis("q", {2, 3, 5}), int_axis("p", ints(1, 4))},
               [](const Point& p) { return pq_ok(p, true); }, "1 <= p < q"),
          [](const Point& p, const EvalContext&) {
              const auto r = rhs_apostol_multiplication(p.get_uint("m"), p.get_uint("p"), p.get_uint("q"));
              SideValue v(r.lhs);
              v.aux = {{"max_component_error", r.max_component_error}};
              return v;
          },
          [](const Point& p, const EvalContext&) {
              return SideValue(rhs_apostol_multiplication(p.get_uint("m"), p.get_uint("p"), p.get_uint("q")).rhs);
          })
        .tol_abs = 1e-9;
    b.out.back().tol_rel = 1e-9;

    b.add("EISENSTEIN",
          "zeta(s,(2p-1)/(2q)) = (1/q) sum_{r=1..q} (2q)^s e^(-(2p-1) pi i r/q) ell_{E,s}(r/q), "
          "ell_{E,s}(1) = -lambda(s)",
          grid({real_axis("s", {-1.5, -1.0, 0.5, 2.0, 2.5, 3.0}), int_axis("q", {2, 3, 5}), int_axis("p", ints(1, 4))},
               [](const Point& p) { return pq_ok(p, true) && p.get("s") != 1.0; }, "1 <= p < q, s != 1"),
          [](const Point& p, const EvalContext&) {
              const double a = (2.0 * p.get_uint("p") - 1.0) / (2.0 * p.get_uint("q"));
              return SideValue(hurwitz_zeta(p.get("s"), a).value);
          },
          [](const Point& p, const EvalContext&) {
              return SideValue(rhs_eisenstein(p.get("s"), p.get_uint("p"), p.get_uint("q")));
          })
        .tol_abs = 1e-9;
    b.out.back().tol_rel = 1e-9;

    b.add("BERNOULLI-EISEN",
          "B_{m+1}((2p-1)/(2q)) = q^(-m-1) sum_{r=1..q} e^(-2 (p-1) pi i r/q) B_{m+1}(1/2, e^(2 pi i r/q))",
          grid({int_axis("m", ints(0, 4)), int_axis("q", {2, 3, 5}), int_axis("p", ints(1, 4))},
               [](const Point& p) { return pq_ok(p, true); }, "1 <= p < q"),
          [](const Point& p, const EvalContext&) {
              const unsigned m = p.get_uint("m"), pp = p.get_uint("p"), q = p.get_uint("q");
              return SideValue(to_double(bernoulli_polynomial(m + 1)(Rational(2 * pp - 1, 2 * q))));
          },
          [](const Point& p, const EvalContext&) {
              const unsigned m = p.get_uint("m"), pp = p.get_uint("p"), q = p.get_uint("q");
              Complex sum = 0.0;
              for (unsigned r = 1; r <= q; ++r) {
                  const double ph = static_cast<double>((2ul * (pp - 1) * r) % (2ul * q)) / q;
                  const double al = static_cast<double>((2ul * r) % (2ul * q)) / q;
                  sum += expi_pi(-ph) * apostol_bernoulli(m + 1, 0.5, expi_pi(al));
              }
              return SideValue(sum / std::pow(static_cast<double>(q), m + 1.0));
          })
        .tol_abs = 1e-9;
    b.out.back().tol_rel = 1e-9;

    b.add("MUL-DIS",
          "form 0: (1/q) sum_r (2q)^s e^(-(2p+1) pi i r/q) ell_{E,s}(r/q) = Gamma(1-s)/pi^(1-s) "
          "(e^(-i pi (1-s)/2) ell_{E,1-s}(x) - e^(i pi (1-s)/2) ell_{E,1-s}(1-x)), x read as p/q; "
          "form 1: (2q)^(-s) sum_r e^((2r-1) pi i p/q) zeta(s,(2r-1)/(2q)) = Gamma(1-s)/(2 pi^(1-s)) "
          "(e^(i pi (1-s)/2) zeta_E(1-s,p/q) - e^(-i pi (1-s)/2) zeta_E(1-s,1-p/q))",
          grid({int_axis("form", {0, 1}), real_axis("s", {-1.5, 0.5, 2.5}), int_axis("q", {2, 3, 5}),
                int_axis("p", ints(1, 4))},
               [](const Point& p) { return pq_ok(p, true); }, "1 <= p < q"),
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s");
              const unsigned pp = p.get_uint("p"), q = p.get_uint("q");
              Complex sum = 0.0;
              if (p.get_uint("form") == 0) {
                  for (unsigned r = 1; r <= q; ++r) {
                      const double ph = static_cast<double>(((2ul * pp + 1ul) * r) % (2ul * q)) / q;
                      const Complex ell =
                          (r == q) ? -dirichlet_lambda(s).value : lerch_e(s, static_cast<double>(r) / q);
                      sum += expi_pi(-ph) * ell;
                  }
                  return SideValue(std::pow(2.0 * q, s) * sum / static_cast<double>(q));
              }
              for (unsigned r = 1; r <= q; ++r) {
                  const double ph = static_cast<double>(((2ul * r - 1ul) * pp) % (2ul * q)) / q;
                  sum += expi_pi(ph) * hurwitz_zeta(s, (2.0 * r - 1.0) / (2.0 * q)).value;
              }
              return SideValue(std::pow(2.0 * q, -s) * sum);
          },
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s");
              const double x = static_cast<double>(p.get_uint("p")) / p.get_uint("q");
              const Complex g = ezeta::gamma(1.0 - s) * std::pow(pi, s - 1.0);
              const double w = 0.5 * (1.0 - s);
              if (p.get_uint("form") == 0)
                  return SideValue(g * (expi_pi(-w) * lerch_e(1.0 - s, x) - expi_pi(w) * lerch_e(1.0 - s, 1.0 - x)));
              return SideValue(0.5 * g * (expi_pi(w) * zeta_e(1.0 - s, x).value -
                                          expi_pi(-w) * zeta_e(1.0 - s, 1.0 - x).value));
          })
        .tol_abs = 1e-9;
    b.out.back().tol_rel = 1e-9;
    b.out.back().status = IdentityStatus::Disputed;
}

constexpr unsigned long fourier_terms = 10000;

void fourier_series_layer(Builder& b) {
    const GridSpec g = grid({int_axis("n", ints(2, 5)), real_axis("x", x_tenths)},
                            [](const Point& p) { return p.get("x") >= 0.0 && p.get("x") < 1.0; }, "0 <= x < 1");

    b.add("EULER-FOURIER",
          "E_n(x) = 4 n!/pi^(n+1) sum_k sin((2k+1) pi x - n pi/2)/(2k+1)^(n+1) [form 0]; even/odd split "
          "E_{2m}(x) = 4 (-1)^m (2m)! sum_k sin((2k+1) pi x)/((2k+1) pi)^(2m+1), E_{2m+1}(x) = 4 (-1)^(m-1) (2m+1)! "
          "sum_k cos((2k+1) pi x)/((2k+1) pi)^(2m+2) [form 1]; 10^4 terms",
          grid({int_axis("form", {0, 1}), g.axes[0], g.axes[1]}, g.constraint, g.constraint_text),
          [](const Point& p, const EvalContext&) {
              return SideValue(euler_polynomial(p.get_uint("n"))(p.get("x")));
          },
          [](const Point& p, const EvalContext&) {
              const unsigned n = p.get_uint("n");
              const double x = p.get("x");
              double sum = 0.0;
              if (p.get_uint("form") == 0) {
                  for (unsigned long k = 0; k < fourier_terms; ++k) {
                      const double w = 2.0 * k + 1.0;
                      sum += sinpi(std::fmod(w * x, 2.0) - 0.5 * n) / std::pow(w, n + 1.0);
                  }
                  return SideValue(4.0 * fact(n) / std::pow(pi, n + 1.0) * sum);
              }
              const unsigned m = n / 2;
              for (unsigned long k = 0; k < fourier_terms; ++k) {
                  const double w = 2.0 * k + 1.0;
                  const double ph = std::fmod(w * x, 2.0);
                  sum += (n % 2 == 0 ? sinpi(ph) : cospi(ph)) / std::pow(w * pi, n + 1.0);
              }
              const double sign = (n % 2 == 0) ? (m % 2 == 0 ? 1.0 : -1.0) : (m % 2 == 1 ? 1.0 : -1.0);
              return SideValue(4.0 * sign * fact(n) * sum);
          })
        .tol_abs = 1e-5;

    b.add("EULER-FOURIER-COM",
          "E_n(x) = 2 (-i)^(n-1) n! sum_k ((-1)^(n-1) e^((2k+1) pi i x) + e^(-(2k+1) pi i x)) / ((2k+1) pi)^(n+1), "
          "10^4 terms",
          g,
          [](const Point& p, const EvalContext&) {
              return SideValue(euler_polynomial(p.get_uint("n"))(p.get("x")));
          },
          [](const Point& p, const EvalContext&) {
              const unsigned n = p.get_uint("n");
              const double x = p.get("x");
              const double sgn = (n % 2 == 1) ? 1.0 : -1.0;
              Complex sum = 0.0;
              for (unsigned long k = 0; k < fourier_terms; ++k) {
                  const double w = 2.0 * k + 1.0;
                  const double ph = std::fmod(w * x, 2.0);
                  sum += (sgn * expi_pi(ph) + expi_pi(-ph)) / std::pow(w * pi, n + 1.0);
              }
              Complex mi = 1.0;
              for (unsigned j = 0; j + 1 < n; ++j) mi *= Complex(0.0, -1.0);
              return SideValue(2.0 * mi * fact(n) * sum);
          })
        .tol_abs = 1e-5;
    b.out.back().status = IdentityStatus::Disputed;

    b.add("BERNOULLI-FOURIER",
          "B_n(x) = -(-i)^n n! sum_{k>=1} (e^(2 pi i k x) + (-1)^n e^(-2 pi i k x)) / (2 pi k)^n, 10^4 terms",
          g,
          [](const Point& p, const EvalContext&) {
              return SideValue(bernoulli_polynomial(p.get_uint("n"))(p.get("x")));
          },
          [](const Point& p, const EvalContext&) {
              const unsigned n = p.get_uint("n");
              const double x = p.get("x");
              const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
              Complex sum = 0.0;
              for (unsigned long k = 1; k <= fourier_terms; ++k) {
                  const double ph = std::fmod(2.0 * k * x, 2.0);
                  sum += (expi_pi(ph) + sgn * expi_pi(-ph)) / std::pow(2.0 * pi * k, n);
              }
              Complex mi = 1.0;
              for (unsigned j = 0; j < n; ++j) mi *= Complex(0.0, -1.0);
              return SideValue(-mi * fact(n) * sum);
          })
        .tol_abs = 1e-5;
}

void exp_sum_layer(Builder& b) {
    b.add("EXP-SUM",
          "sum_{r=1..m-1} (-1)^r e^(-2 pi i r a/m) ell_{E,1-n}(r/m) = (-1)^(n-1)/4 (m^n E_{n-1}({2a/m}) + E_{n-1}(0)) "
          "- 1/(2n) (m^n B_n({2a/m}) + B_n(0)), m odd > 1, a = alpha not divisible by m",
          grid({int_axis("m", {3, 5}), int_axis("alpha", ints(1, 4)), int_axis("n", ints(1, 4))},
               [](const Point& p) {
                   const double m = p.get("m"), a = p.get("alpha");
                   return m > 1 && std::fmod(m, 2.0) == 1.0 && a >= 1 && a < m && p.get("n") >= 1;
               },
               "m odd > 1, 1 <= alpha < m, n >= 1"),
          [](const Point& p, const EvalContext&) {
              const unsigned m = p.get_uint("m"), a = p.get_uint("alpha"), n = p.get_uint("n");
              Complex sum = 0.0, abel = 0.0;
              for (unsigned r = 1; r < m; ++r) {
                  const double ph = static_cast<double>((2ul * r * a) % (2ul * m)) / m;
                  const double sign = (r % 2 == 0) ? 1.0 : -1.0;
                  const double x = static_cast<double>(r) / m;
                  sum += sign * expi_pi(-ph) * lerch_e_neg_int(n - 1, x);
                  abel += sign * expi_pi(-ph) * lerch_neg_int_abel(n - 1, x);
              }
              SideValue v(sum);
              v.aux = {{"lhs_abel_re", abel.real()}, {"lhs_abel_im", abel.imag()}};
              return v;
          },
          [](const Point& p, const EvalContext&) {
              const unsigned m = p.get_uint("m"), a = p.get_uint("alpha"), n = p.get_uint("n");
              const Rational y((2 * a) % m, m);
              const Rational mn = Rational(boost::multiprecision::pow(BigInt(m), n));
              const RationalPolynomial E = euler_polynomial(n - 1), B = bernoulli_polynomial(n);
              const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
              const Rational v =
                  sign / Rational(4) * (mn * E(y) + E(Rational(0))) - (mn * B(y) + B(Rational(0))) / Rational(2 * n);
              return exact(v);
          })
        .status = IdentityStatus::Disputed;
    b.out.back().defaults = Point({{"m", 3}, {"alpha", 1}, {"n", 1}});
}

void zeta_layer(Builder& b) {
    b.add("RECURRENCE", "zeta_E(s,x) + zeta_E(s,x+1) = x^(-s)",
          grid({real_axis("s", {-3.5, -1.0, 0.5, 2.0}), real_axis("x", {0.25, 0.5, 1.0})},
               [](const Point& p) { return p.get("x") > 0.0; }, "x > 0"),
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s"), x = p.get("x");
              return SideValue(ze(s, x) + ze(s, x + 1.0));
          },
          [](const Point& p, const EvalContext&) { return SideValue(std::pow(p.get("x"), -p.get("s"))); })
        .tol_abs = 1e-10;
    b.out.back().tol_rel = 1e-10;

    b.add("MULT-ODD", "zeta_E(s,k x) = k^(-s) sum_{n<k} (-1)^n zeta_E(s, n/k + x), k odd",
          grid({int_axis("k", {3, 5}), real_axis("s", {-3.5, -1.0, 0.5, 2.0}), real_axis("x", {0.1, 0.25, 0.4})},
               [](const Point& p) { return p.get("x") > 0.0 && std::fmod(p.get("k"), 2.0) == 1.0; },
               "x > 0, k odd"),
          [](const Point& p, const EvalContext&) {
              return SideValue(ze(p.get("s"), p.get("k") * p.get("x")));
          },
          [](const Point& p, const EvalContext&) {
              const unsigned k = p.get_uint("k");
              const double s = p.get("s"), x = p.get("x");
              Complex sum = 0.0;
              for (unsigned n = 0; n < k; ++n) sum += (n % 2 == 0 ? 1.0 : -1.0) * ze(s, static_cast<double>(n) / k + x);
              return SideValue(std::pow(static_cast<double>(k), -s) * sum);
          })
        .tol_abs = 1e-10;
    b.out.back().tol_rel = 1e-10;

    b.add("TAYLOR", "zeta_E(s,x) - x^(-s) = -sum_{n<40} C(-s,n) zeta_E(s+n) x^n, zeta_E(s) = zeta_E(s,1)",
          grid({real_axis("s", {2.5, 3.0, 4.5}), real_axis("x", {0.1, 0.25, 0.4, 0.5})},
               [](const Point& p) {
                   const double s = p.get("s"), x = p.get("x");
                   return s != 1.0 && x > 0.0 && x <= 0.5 && (s <= 3.0 || x <= 0.4);
               },
               "s != 1, 0 < x <= 1/2; x <= 0.4 when s > 3 (40-term truncation)"),
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s"), x = p.get("x");
              return SideValue(ze(s, x) - std::pow(x, -s));
          },
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s"), x = p.get("x");
              Complex sum = 0.0;
              double c = 1.0, xn = 1.0;  // C(-s,n)
              for (unsigned n = 0; n < 40; ++n) {
                  sum += c * ze(s + n, 1.0) * xn;
                  c *= (-s - n) / (n + 1.0);
                  xn *= x;
              }
              return SideValue(-sum);
          });

    b.add("HZ-FOURIER", "zeta(s,x) = 2 Gamma(1-s)/(2 pi)^(1-s) sum_{n=1..10^5} sin(2 n pi x + pi s/2)/n^(1-s)",
          grid({real_axis("s", {-2.5, -1.5, -0.5}), real_axis("x", {0.25, 0.75})},
               [](const Point& p) { return p.get("s") < 0.0 && p.get("x") > 0.0 && p.get("x") <= 1.0; },
               "s < 0, 0 < x <= 1"),
          [](const Point& p, const EvalContext&) { return SideValue(hurwitz_zeta(p.get("s"), p.get("x")).value); },
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s"), x = p.get("x");
              double sum = 0.0;
              for (unsigned long n = 1; n <= 100000; ++n)
                  sum += sinpi(std::fmod(2.0 * n * x, 2.0) + 0.5 * s) * std::pow(static_cast<double>(n), s - 1.0);
              return SideValue(2.0 * ezeta::gamma(1.0 - s) * std::pow(2.0 * pi, s - 1.0) * sum);
          })
        .tol_abs = 1e-6;

    b.add("ZE-SPECIAL", "zeta_E(-m,x) = E_m(x)/2",
          grid({int_axis("m", ints(0, 8)), real_axis("x", range(0.1, 1.0, 0.1))},
               [](const Point& p) { return p.get("x") > 0.0; }, "x > 0"),
          [](const Point& p, const EvalContext&) { return SideValue(ze(-1.0 * p.get_uint("m"), p.get("x"))); },
          [](const Point& p, const EvalContext&) {
              return SideValue(0.5 * euler_polynomial(p.get_uint("m"))(p.get("x")));
          })
        .tol_abs = 1e-10;

    b.add("ZE-FOURIER",
          "zeta_E(s,x) = 2 Gamma(1-s)/pi^(1-s) sum_{n<10^5} sin((2n+1) pi x + pi s/2)/(2n+1)^(1-s)",
          grid({real_axis("s", {-1.5, -0.5}), real_axis("x", {0.25, 0.5, 0.75})},
               [](const Point& p) { return p.get("s") < 1.0 && p.get("x") > 0.0 && p.get("x") <= 1.0; },
               "s < 1, 0 < x <= 1"),
          [](const Point& p, const EvalContext&) { return SideValue(ze(p.get("s"), p.get("x"))); },
          [](const Point& p, const EvalContext&) {
              const ZetaValue v = zeta_e_fourier(p.get("s"), p.get("x"), 100000);
              return SideValue(v.value, v.est_error);
          })
        .tol_abs = 1e-5;

    b.add("ZE-BRIDGE", "zeta_E(s,1) = (1 - 2^(1-s)) zeta(s)",
          grid({real_axis("s", {-3.5, -2.0, -0.5, 0.5, 2.0, 3.5})},
               [](const Point& p) { return p.get("s") != 1.0; }, "s != 1"),
          [](const Point& p, const EvalContext&) { return SideValue(ze(p.get("s"), 1.0)); },
          [](const Point& p, const EvalContext&) {
              const double s = p.get("s");
              return SideValue(-std::expm1((1.0 - s) * std::log(2.0)) * riemann_zeta(s).value);
          })
        .tol_abs = 1e-12;
    b.out.back().tol_rel = 1e-12;
}

std::vector<IdentitySpec> build() {
    Builder b;
    fourier_layer(b);
    product_layer(b);
    euler_layer(b);
    exponential_layer(b);
    secant_layer(b);
    lambda_layer(b);
    functional_layer(b);
    rational_layer(b);
    fourier_series_layer(b);
    exp_sum_layer(b);
    zeta_layer(b);
    std::sort(b.out.begin(), b.out.end(), [](const auto& l, const auto& r) { return l.id < r.id; });
    return std::move(b.out);
}

}  // namespace

SideValue SideValue::from_exact(const Rational& r) {
    SideValue v(to_double(r));
    v.exact = r;
    return v;
}

SideValue SideValue::from_quad(const QuadratureResult& q) {
    SideValue v(q.value, q.est_error);
    v.quad = q;
    return v;
}

const std::vector<IdentitySpec>& catalog() {
    static const std::vector<IdentitySpec> specs = build();
    return specs;
}

const IdentitySpec* find_identity(const std::string& id) {
    for (const auto& s : catalog())
        if (s.id == id) return &s;
    return nullptr;
}

}  // namespace ezeta
