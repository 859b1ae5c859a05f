#pragma once

#include <string>

#include "ezeta/types.hpp"

namespace ezeta {

struct EvalOptions {
    double target_abs_tol = 1e-13;
    unsigned long max_series_terms = 1000000;
    /// Euler-Maclaurin head length N; 0 selects it adaptively.
    unsigned em_tail_start = 0;
    /// Euler-Maclaurin correction terms M (at most 30).
    unsigned em_correction_terms = 15;

    void validate() const;
};

enum class Method {
    DirectSeries,
    HurwitzDifference,
    HurwitzDifferencePerturbed,
    FourierExpansion,
    ClosedForm,
    FunctionalEquation,
    EulerMaclaurin,
    AcceleratedSeries,
};

std::string to_string(Method m);

struct ZetaValue {
    Complex value;
    double est_error = 0.0;
    Method method = Method::EulerMaclaurin;
};

double sinpi(double x);
double cospi(double x);
Complex sinpi(Complex z);
Complex cospi(Complex z);

/// Lanczos gamma with reflection; PoleError at nonpositive integers.
Complex gamma(Complex s);
/// Gamma(s) Gamma(t) / Gamma(s+t)
Complex beta_function(Complex s, Complex t);

ZetaValue hurwitz_zeta(Complex s, double x, const EvalOptions& opts = {});
ZetaValue riemann_zeta(Complex s);
ZetaValue dirichlet_lambda(Complex s);
ZetaValue dirichlet_beta(Complex s);
/// Cohen-Rodriguez Villegas-Zagier acceleration of sum (-1)^n (2n+1)^{-s}, Re s > 0.
Complex dirichlet_beta_alternating(Complex s, unsigned terms = 40);

ZetaValue zeta_e(Complex s, double x, const EvalOptions& opts = {});
/// Truncated Fourier expansion of zeta_E, valid for Re s < 1 and 0 < x <= 1.
ZetaValue zeta_e_fourier(Complex s, double x, unsigned long terms);
/// zeta_E(s,x) - zeta_E(s,1-x), 0 < x < 1
Complex g_e(Complex s, double x);

/// sum e^{(2n+1) pi i x} / (2n+1)^s, 0 < x < 1
Complex lerch_e(Complex s, double x);
/// lerch_e at x = p/q through Hurwitz values, 1 <= p <= q
Complex lerch_e_rational(Complex s, unsigned p, unsigned q);
/// lerch_e at s = -m through Apostol-Bernoulli polynomials
Complex lerch_e_neg_int(unsigned m, double x);
/// sum e^{2 n pi i x} / (n+a)^s
Complex phi_lerch(double x, double a, Complex s);
/// F(x,s) = sum lambda(n+2-s) x^n, |x| < 0.95
Complex transcendental_f(Complex x, Complex s);

}  // namespace ezeta
