#include <cmath>

#include "ezeta/identities.hpp"
#include "ezeta/zeta.hpp"

namespace ezeta {

namespace {

void require_nonpositive(double s, const char* who) {
    if (!(s <= 0.0)) throw DomainError(std::string(who) + ": requires s <= 0");
}

// e^{i pi t}
Complex expi_pi(double t) { return {cospi(t), sinpi(t)}; }

double lambda_real(double s) { return dirichlet_lambda(s).value.real(); }

Complex gamma1m(double s) { return ezeta::gamma(Complex(1.0 - s, 0.0)); }

}  // namespace

Complex rhs_fourier_coefficient(FourierKind kind, double s, unsigned k) {
    require_nonpositive(s, "rhs_fourier_coefficient");
    const double odd = 2.0 * k + 1.0;
    const Complex f = std::pow(pi * odd, s - 1.0) * gamma1m(s);
    return f * (kind == FourierKind::Sin ? cospi(0.5 * s) : sinpi(0.5 * s));
}

Complex rhs_product_integral(double s, double sp, bool reflected) {
    require_nonpositive(s, "rhs_product_integral");
    require_nonpositive(sp, "rhs_product_integral");
    const double w = 2.0 - s - sp;
    const double trig = reflected ? cospi(0.5 * (s + sp)) : cospi(0.5 * (s - sp));
    return 2.0 * gamma1m(s) * gamma1m(sp) * std::pow(pi, -w) * lambda_real(w) * trig;
}

Complex rhs_euler_transform(unsigned m, double s) {
    require_nonpositive(s, "rhs_euler_transform");
    if (m < 1) throw DomainError("rhs_euler_transform: requires m >= 1");
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    const double fact = to_double(Rational(factorial(m - 1)));
    return sign * 2.0 * delta2(m - s) * fact * lambda_real(s - m) / pochhammer(1.0 - s, m);
}

Complex rhs_moment(unsigned n, double s) {
    require_nonpositive(s, "rhs_moment");
    Complex sum = 0.0;
    auto term = [&](unsigned j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        const double fact = to_double(Rational(factorial(j)));
        return sign * delta2(j - s + 1.0) * fact * lambda_real(s - j - 1.0) / pochhammer(1.0 - s, j + 1);
    };
    for (unsigned j = 0; j <= n; ++j) sum += to_double(Rational(binomial(n, j))) * term(j);
    return sum + term(n);
}

Rational rhs_moment_euler(unsigned n, unsigned m) {
    if (m < 1) throw DomainError("rhs_moment_euler: requires m >= 1");
    Rational acc = 0;
    for (unsigned j = 0; j <= n; ++j)
        acc += Rational(binomial(n, j)) / Rational(binomial(m + j, j)) * euler_poly_at_zero(m + j);
    acc += euler_poly_at_zero(m + n) / Rational(binomial(m + n, n));
    const Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
    return sign / Rational(m) * acc;
}

Complex rhs_exp_transform(double t, double s) {
    require_nonpositive(s, "rhs_exp_transform");
    if (!(std::fabs(t) <= 0.45)) throw DomainError("rhs_exp_transform: requires |t| <= 0.45");
    const Complex F = transcendental_f(Complex(0.0, 2.0 * t), s);
    const double re = (expi_pi(0.5 * s) * F).real();
    return 2.0 * (std::exp(2.0 * pi * t) + 1.0) * gamma1m(s) * std::pow(pi, s - 2.0) * re;
}

Complex rhs_secant_transform(double s) {
    require_nonpositive(s, "rhs_secant_transform");
    return 2.0 * gamma1m(s) * std::pow(pi, s - 1.0) * sinpi(0.5 * s) * dirichlet_beta(1.0 - s).value;
}

BetaEvenSeries rhs_beta_even_series(unsigned m, unsigned max_n) {
    if (m < 1) throw DomainError("rhs_beta_even_series: requires m >= 1");
    BetaEvenSeries out;
    for (unsigned n = 1; n <= max_n; ++n) {
        Rational inner = 0;
        for (unsigned j = 1; j <= n; ++j)
            inner += euler_poly_at_zero(2 * m + 2 * j - 1) /
                     Rational(factorial(2 * n - 2 * j + 1) * factorial(2 * m + 2 * j - 1));
        const Rational c = Rational(euler_number(2 * n)) * inner / Rational(4);
        const double sign = ((n + m) % 2 == 0) ? 1.0 : -1.0;
        const double t = sign * to_double(c) * std::pow(pi, 2.0 * (m + n));
        out.term_values.push_back(t);
        out.sum += t;
        out.last_term = std::fabs(t);
        out.terms = n;
    }
    return out;
}

Complex rhs_rational_argument(Complex s, unsigned p, unsigned q) {
    if (q == 0 || p < 1 || p > q) throw DomainError("rhs_rational_argument: requires 1 <= p <= q");
    Complex sum = 0.0;
    for (unsigned r = 0; r < q; ++r) {
        const unsigned long num = ((2ul * r + 1ul) * p) % (2ul * q);
        const Complex c = cospi(0.5 * s - static_cast<double>(num) / q);
        sum += c * hurwitz_zeta(s, (2.0 * r + 1.0) / (2.0 * q)).value;
    }
    return 2.0 * ezeta::gamma(s) * std::exp(-s * std::log(2.0 * q * pi)) * sum;
}

Complex rhs_eisenstein(Complex s, unsigned p, unsigned q) {
    if (q < 2 || p < 1 || p >= q) throw DomainError("rhs_eisenstein: requires 1 <= p < q");
    Complex sum = 0.0;
    for (unsigned r = 1; r <= q; ++r) {
        const unsigned long num = ((2ul * p - 1ul) * r) % (2ul * q);
        const Complex ell = (r == q) ? -dirichlet_lambda(s).value : lerch_e(s, static_cast<double>(r) / q);
        sum += expi_pi(-static_cast<double>(num) / q) * ell;
    }
    return std::exp(s * std::log(2.0 * q)) * sum / static_cast<double>(q);
}

ApostolMultiplication rhs_apostol_multiplication(unsigned m, unsigned p, unsigned q) {
    if (q < 2 || p < 1 || p >= q) throw DomainError("rhs_apostol_multiplication: requires 1 <= p < q");
    ApostolMultiplication out;
    const unsigned long two_p = (2ul * p) % (2ul * q);
    out.lhs = apostol_bernoulli(m + 1, 0.5, expi_pi(static_cast<double>(two_p) / q));
    const RationalPolynomial B = bernoulli_polynomial(m + 1);
    Complex sum = 0.0;
    for (unsigned r = 1; r <= q; ++r) {
        const unsigned long num = (2ul * (r - 1) * p) % (2ul * q);
        const double b = to_double(B(Rational(2 * r - 1, 2 * q)));
        sum += expi_pi(static_cast<double>(num) / q) * b;
    }
    out.rhs = std::pow(static_cast<double>(q), m) * sum;
    out.max_component_error =
        std::max(std::fabs(out.lhs.real() - out.rhs.real()), std::fabs(out.lhs.imag() - out.rhs.imag()));
    return out;
}

Complex lerch_neg_int_abel(unsigned m, double x) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("lerch_neg_int_abel: requires 0 < x < 1");
    // (z d/dz)^m z/(1-z^2) = P(z)/(1-z^2)^{m+1}
    std::vector<BigInt> P = {0, 1};
    for (unsigned k = 1; k <= m; ++k) {
        // z P'(1-z^2) + 2k z^2 P
        std::vector<BigInt> next(P.size() + 2, 0);
        for (std::size_t j = 1; j < P.size(); ++j) {
            next[j] += BigInt(static_cast<long>(j)) * P[j];
            next[j + 2] -= BigInt(static_cast<long>(j)) * P[j];
        }
        for (std::size_t j = 0; j < P.size(); ++j) next[j + 2] += BigInt(2 * k) * P[j];
        P = std::move(next);
    }
    const Complex z = expi_pi(x);
    Complex num = 0.0, zp = 1.0;
    for (const auto& c : P) {
        num += c.convert_to<double>() * zp;
        zp *= z;
    }
    const Complex base(1.0 - cospi(2.0 * x), -sinpi(2.0 * x));
    Complex den = 1.0;
    for (unsigned k = 0; k <= m; ++k) den *= base;
    return num / den;
}

}  // namespace ezeta
