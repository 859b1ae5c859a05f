#include <cmath>

#include "ezeta/poly.hpp"
#include "ezeta/zeta.hpp"

namespace ezeta {

namespace {

constexpr double lerch_direct_min_re = 6.0;

Complex pow_neg(double base, Complex s) { return std::exp(-s * std::log(base)); }

// e^{i pi t}
Complex expi_pi(Complex t) { return cospi(t) + Complex(0.0, 1.0) * sinpi(t); }
Complex expi_pi(double t) { return {cospi(t), sinpi(t)}; }

void require_open_unit(double x, const char* who) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError(std::string(who) + ": requires 0 < x < 1");
}

Complex lerch_direct(Complex s, double x) {
    const double sx = std::fabs(sinpi(x));
    Complex sum = 0.0;
    for (unsigned long n = 0; n < 2000000; ++n) {
        const double odd = 2.0 * n + 1.0;
        const Complex c = pow_neg(odd, s);
        sum += expi_pi(std::fmod(odd * x, 2.0)) * c;
        if (std::abs(c) < 1e-17 * sx) break;
    }
    return sum;
}

Complex lerch_continued(Complex s, double x) {
    const Complex w = 1.0 - s;
    const Complex pref = gamma(w) / (2.0 * std::exp(w * std::log(pi)));
    const Complex zx = zeta_e(w, x).value;
    const Complex z1x = zeta_e(w, 1.0 - x).value;
    return pref * (expi_pi(0.5 * w) * zx - expi_pi(-0.5 * w) * z1x);
}

}  // namespace

Complex lerch_e(Complex s, double x) {
    require_open_unit(x, "lerch_e");
    if (s.real() >= lerch_direct_min_re) return lerch_direct(s, x);
    const double n0 = std::round(s.real());
    if (n0 >= 1.0 && std::abs(s - n0) < 0.1) {
        // Gamma(1-s) has a pole here and the bracket vanishes; average over a circle.
        constexpr int K = 24;
        constexpr double radius = 0.3;
        Complex acc = 0.0;
        for (int j = 0; j < K; ++j) {
            const Complex z = s + radius * expi_pi(2.0 * (j + 0.5) / K);
            acc += lerch_continued(z, x);
        }
        return acc / static_cast<double>(K);
    }
    return lerch_continued(s, x);
}

Complex lerch_e_rational(Complex s, unsigned p, unsigned q) {
    if (q == 0 || p < 1 || p > q) throw DomainError("lerch_e_rational: requires 1 <= p <= q");
    constexpr double h = 1e-6;
    if (p < q && std::abs(s - 1.0) < h)
    {
        const Complex a1 = 0.5 * (lerch_e_rational(s + h, p, q) + lerch_e_rational(s - h, p, q));
        const Complex a2 = 0.5 * (lerch_e_rational(s + 2.0 * h, p, q) + lerch_e_rational(s - 2.0 * h, p, q));
        return (4.0 * a1 - a2) / 3.0;
    }
    Complex sum = 0.0;
    for (unsigned r = 1; r <= q; ++r) {
        const unsigned long num = ((2ul * r - 1ul) * p) % (2ul * q);
        const Complex phase = expi_pi(static_cast<double>(num) / q);
        sum += phase * hurwitz_zeta(s, (2.0 * r - 1.0) / (2.0 * q)).value;
    }
    return pow_neg(2.0 * q, s) * sum;
}

Complex lerch_e_neg_int(unsigned m, double x) {
    require_open_unit(x, "lerch_e_neg_int");
    const Complex alpha = expi_pi(std::fmod(2.0 * x, 2.0));
    return -std::ldexp(1.0, static_cast<int>(m)) * expi_pi(x) * apostol_bernoulli(m + 1, 0.5, alpha) /
           static_cast<double>(m + 1);
}

Complex phi_lerch(double x, double a, Complex s) {
    if (!(a > 0.0)) throw DomainError("phi_lerch: requires a > 0");
    if (x == std::floor(x)) return hurwitz_zeta(s, a).value;
    if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real())) {
        const unsigned m = static_cast<unsigned>(-s.real());
        const Complex alpha = expi_pi(std::fmod(2.0 * x, 2.0));
        return -apostol_bernoulli(m + 1, a, alpha) / static_cast<double>(m + 1);
    }
    const double xf = x - std::floor(x);
    if (a == 0.5) return std::exp(s * std::log(2.0)) * expi_pi(-xf) * lerch_e(s, xf);
    if (s.real() > 1.0) {
        const double sx = std::fabs(sinpi(xf));
        Complex sum = 0.0;
        for (unsigned long n = 0; n < 2000000; ++n) {
            const Complex c = pow_neg(n + a, s);
            sum += expi_pi(std::fmod(2.0 * n * xf, 2.0)) * c;
            if (std::abs(c) < 1e-16 * sx) break;
        }
        return sum;
    }
    throw DomainError("phi_lerch: continuation available only for integer x, a = 1/2, "
                      "nonpositive integer s, or Re(s) > 1");
}

Complex transcendental_f(Complex x, Complex s) {
    if (!(std::abs(x) < 0.95)) throw DomainError("transcendental_f: requires |x| < 0.95");
    // F = 1/(1-x) + sum (lambda(n+2-s) - 1) x^n
    Complex sum = 1.0 / (1.0 - x);
    Complex xn = 1.0;
    const double ax = std::abs(x);
    for (unsigned n = 0; n < 4000; ++n) {
        const Complex k = static_cast<double>(n) + 2.0 - s;
        if (k == Complex(1.0, 0.0)) throw PoleError("transcendental_f: lambda pole at n + 2 - s = 1");
        Complex lm1;
        if (k.real() >= 12.0) {
            lm1 = 0.0;
            for (unsigned j = 1; j < 1000; ++j) {
                const Complex t = pow_neg(2.0 * j + 1.0, k);
                lm1 += t;
                if (std::abs(t) < 1e-19) break;
            }
        } else {
            lm1 = dirichlet_lambda(k).value - 1.0;
        }
        sum += lm1 * xn;
        const double bound = 2.0 * std::pow(3.0, -k.real()) * std::pow(ax, n) / (1.0 - ax / 3.0);
        if (n > 2 && bound < 1e-17 * std::max(1.0, std::abs(sum))) break;
        xn *= x;
    }
    return sum;
}

}  // namespace ezeta
