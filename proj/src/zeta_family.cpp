#include <cmath>
#include <limits>

#include "ezeta/zeta.hpp"

namespace ezeta {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

Complex cexpm1(Complex u) {
    const double a = u.real(), b = u.imag();
    const double sh = std::sin(0.5 * b);
    return {std::expm1(a) * std::cos(b) - 2.0 * sh * sh, std::exp(a) * std::sin(b)};
}

Complex pow_neg(double base, Complex s) { return std::exp(-s * std::log(base)); }

// sum_{n >= first} sign^n (2n+1)^{-s} for Re s large
ZetaValue odd_series(Complex s, bool alternating, unsigned first) {
    Complex sum = 0.0;
    double last = 1.0;
    unsigned n = first;
    for (; n < 100000; ++n) {
        const double odd = 2.0 * n + 1.0;
        const Complex t = pow_neg(odd, s);
        sum += (alternating && (n % 2 == 1)) ? -t : t;
        last = std::abs(t);
        if (last < 1e-18 * std::max(1.0, std::abs(sum))) break;
    }
    const double odd = 2.0 * n + 1.0;
    const double tail = alternating ? last : last * odd / (2.0 * std::max(s.real() - 1.0, 1e-3));
    return {sum, tail + 4.0 * eps * std::abs(sum), Method::DirectSeries};
}

}  // namespace

ZetaValue riemann_zeta(Complex s) {
    if (s == Complex(1.0, 0.0)) throw PoleError("riemann_zeta: pole at s = 1");
    if (s.real() >= 0.0) {
        auto v = hurwitz_zeta(s, 1.0);
        return v;
    }
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    const ZetaValue r = hurwitz_zeta(1.0 - s, 1.0);
    const Complex f = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(pi)) * sinpi(0.5 * s) * gamma(1.0 - s);
    const Complex v = f * r.value;
    return {v, std::abs(f) * r.est_error + 16.0 * eps * std::abs(v), Method::FunctionalEquation};
}

ZetaValue dirichlet_lambda(Complex s) {
    if (s == Complex(1.0, 0.0)) throw PoleError("dirichlet_lambda: pole at s = 1");
    if (s.real() >= 12.0) return odd_series(s, false, 0);
    const ZetaValue z = riemann_zeta(s);
    const Complex f = -cexpm1(-s * std::log(2.0));
    const Complex v = f * z.value;
    return {v, std::abs(f) * z.est_error + 4.0 * eps * std::abs(v), z.method};
}

Complex dirichlet_beta_alternating(Complex s, unsigned terms) {
    // Cohen, Rodriguez Villegas, Zagier, algorithm 1
    double d = std::pow(3.0 + std::sqrt(8.0), static_cast<double>(terms));
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    Complex sum = 0.0;
    const double n = terms;
    for (unsigned k = 0; k < terms; ++k) {
        c = b - c;
        sum += c * pow_neg(2.0 * k + 1.0, s);
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
    }
    return sum / d;
}

ZetaValue dirichlet_beta(Complex s) {
    if (s.real() >= 20.0) return odd_series(s, true, 0);
    if (std::abs(s - 1.0) < 0.25) {
        const Complex v = dirichlet_beta_alternating(s, 40);
        return {v, 1e-15 * std::max(1.0, std::abs(v)), Method::AcceleratedSeries};
    }
    if (s.real() < 0.5) {
        // beta(s) = (2/pi)^{1-s} cos(pi s/2) Gamma(1-s) beta(1-s)
        const ZetaValue r = dirichlet_beta(1.0 - s);
        const Complex f = std::exp((1.0 - s) * std::log(2.0 / pi)) * cospi(0.5 * s) * gamma(1.0 - s);
        const Complex v = f * r.value;
        return {v, std::abs(f) * r.est_error + 16.0 * eps * std::abs(v), Method::FunctionalEquation};
    }
    const ZetaValue z = zeta_e(s, 0.5);
    const Complex f = pow_neg(2.0, s);
    return {f * z.value, std::abs(f) * z.est_error, Method::HurwitzDifference};
}

}  // namespace ezeta
