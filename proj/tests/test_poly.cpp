#include <cmath>
#include <vector>

#include "doctest.h"
#include "ezeta/poly.hpp"

using namespace ezeta;

namespace {

// coefficients of a(z)/b(z) up to z^n, b[0] != 0
template <typename T>
std::vector<T> series_divide(const std::vector<T>& a, const std::vector<T>& b, unsigned n) {
    std::vector<T> q(n + 1, T(0));
    for (unsigned k = 0; k <= n; ++k) {
        T acc = k < a.size() ? a[k] : T(0);
        for (unsigned j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return q;
}

Rational inv_fact(unsigned k) { return Rational(1) / Rational(factorial(k)); }

// B_m(a, alpha) from z e^{az} / (alpha e^z - 1)
Complex apostol_oracle(unsigned m, double a, Complex alpha) {
    std::vector<Complex> num(m + 2, 0.0), den(m + 2, 0.0);
    double f = 1.0;
    for (unsigned k = 0; k <= m + 1; ++k) {
        if (k > 0) f *= k;
        if (k + 1 <= m + 1) num[k + 1] = std::pow(a, k) / f;
        den[k] = alpha / f;
    }
    den[0] -= 1.0;
    const auto q = series_divide(num, den, m);
    double mf = 1.0;
    for (unsigned k = 2; k <= m; ++k) mf *= k;
    return q[m] * mf;
}

}  // namespace

TEST_SUITE("poly") {
    TEST_CASE("bernoulli numbers") {
        CHECK(bernoulli_number(0) == Rational(1));
        CHECK(bernoulli_number(1) == Rational(-1, 2));
        CHECK(bernoulli_number(2) == Rational(1, 6));
        CHECK(bernoulli_number(12) == Rational(-691, 2730));
    }

    TEST_CASE("bernoulli and euler polynomials, low degree") {
        CHECK(bernoulli_polynomial(0) == RationalPolynomial({Rational(1)}));
        CHECK(bernoulli_polynomial(1) == RationalPolynomial({Rational(-1, 2), Rational(1)}));
        CHECK(euler_polynomial(0) == RationalPolynomial({Rational(1)}));
        CHECK(euler_polynomial(1) == RationalPolynomial({Rational(-1, 2), Rational(1)}));
        CHECK(euler_polynomial(2) == RationalPolynomial({Rational(0), Rational(-1), Rational(1)}));
    }

    TEST_CASE("euler numbers") {
        const std::vector<int> want = {1, 0, -1, 0, 5, 0, -61};
        for (unsigned m = 0; m < want.size(); ++m) CHECK(euler_number(m) == want[m]);
        CHECK(euler_number(20) == BigInt("370371188237525"));
    }

    TEST_CASE("euler polynomial at zero") {
        CHECK(euler_poly_at_zero(0) == Rational(1));
        CHECK(euler_poly_at_zero(1) == Rational(-1, 2));
        CHECK(euler_poly_at_zero(3) == Rational(1, 4));
        for (unsigned m = 0; m <= 20; ++m) {
            CHECK(euler_poly_at_zero(m) == euler_polynomial(m)(Rational(0)));
            const Rational via_b =
                Rational(2) / Rational(m + 1) * (Rational(1) - Rational(BigInt(1) << (m + 1))) * bernoulli_number(m + 1);
            CHECK(euler_poly_at_zero(m) == via_b);
        }
    }

    TEST_CASE("pochhammer and delta2") {
        CHECK(pochhammer(Complex(0.3, 0.7), 0) == Complex(1.0));
        CHECK(pochhammer(1.0, 5).real() == doctest::Approx(120.0));
        CHECK(pochhammer(-0.5, 3).real() == doctest::Approx(-0.375));
        CHECK(delta2(1.0) == doctest::Approx(3.0));
        CHECK(delta2(-1.0) == doctest::Approx(0.0));
        CHECK_THROWS_AS(delta2(0.0), DomainError);
    }

    TEST_CASE("euler polynomial difference equation, m <= 20") {
        for (unsigned m = 0; m <= 20; ++m) {
            const RationalPolynomial E = euler_polynomial(m);
            CHECK(E.shifted(Rational(1)) + E == Rational(2) * RationalPolynomial::monomial(m));
        }
    }

    TEST_CASE("odd euler numbers vanish and 2^m E_m(1/2) = E_m, m <= 20") {
        for (unsigned m = 0; m <= 20; ++m) {
            if (m % 2 == 1) CHECK(euler_number(m) == 0);
            const Rational half = euler_polynomial(m)(Rational(1, 2));
            CHECK(half * Rational(BigInt(1) << m) == Rational(euler_number(m)));
        }
    }

    TEST_CASE("bernoulli and euler numbers against power-series division, m <= 20") {
        const unsigned n = 20;
        // z/(e^z - 1) = 1 / sum z^k/(k+1)!
        std::vector<Rational> one = {Rational(1)}, ez(n + 1);
        for (unsigned k = 0; k <= n; ++k) ez[k] = inv_fact(k + 1);
        const auto b = series_divide(one, ez, n);
        for (unsigned m = 0; m <= n; ++m) CHECK(bernoulli_number(m) == b[m] * Rational(factorial(m)));
        // sech z = 1 / cosh z
        std::vector<Rational> ch(n + 1, Rational(0));
        for (unsigned k = 0; k <= n; k += 2) ch[k] = inv_fact(k);
        const auto e = series_divide(one, ch, n);
        for (unsigned m = 0; m <= n; ++m) CHECK(Rational(euler_number(m)) == e[m] * Rational(factorial(m)));
    }

    TEST_CASE("euler polynomials against 2 e^{xz}/(e^z + 1) at x = 1/3") {
        const unsigned n = 12;
        const Rational x(1, 3);
        std::vector<Rational> num(n + 1), den(n + 1);
        Rational xp = 1;
        for (unsigned k = 0; k <= n; ++k) {
            num[k] = Rational(2) * xp * inv_fact(k);
            den[k] = inv_fact(k);
            xp *= x;
        }
        den[0] += 1;
        const auto q = series_divide(num, den, n);
        for (unsigned m = 0; m <= n; ++m) CHECK(euler_polynomial(m)(x) == q[m] * Rational(factorial(m)));
    }

    TEST_CASE("apostol-bernoulli examples and oracle") {
        const Complex b1 = apostol_bernoulli(1, 0.5, -1.0);
        CHECK(b1.real() == doctest::Approx(-0.5).epsilon(1e-14));
        CHECK(std::abs(b1.imag()) < 1e-15);
        for (unsigned m = 0; m <= 6; ++m)
            for (double a : {0.0, 0.5, 1.0}) {
                const double want = bernoulli_polynomial(m)(a);
                CHECK(std::abs(apostol_bernoulli(m, a, 1.0) - want) <= 1e-12 * std::max(1.0, std::fabs(want)));
            }
        const Complex i(0.0, 1.0);
        for (unsigned m = 0; m <= 8; ++m)
            for (Complex alpha : {i, Complex(-1.0), std::polar(1.0, 2.0), Complex(0.5, -0.25), Complex(3.0, 1.0)})
                for (double a : {0.0, 0.5, 0.8}) {
                    const Complex want = apostol_oracle(m, a, alpha);
                    CHECK(std::abs(apostol_bernoulli(m, a, alpha) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
                }
    }

    TEST_CASE("polynomial arithmetic") {
        const RationalPolynomial p({Rational(1), Rational(2)});
        const RationalPolynomial q({Rational(-1), Rational(0), Rational(3)});
        CHECK((p * q)(Rational(2)) == p(Rational(2)) * q(Rational(2)));
        CHECK((p - p).is_zero());
        CHECK(q.degree() == 2);
        CHECK(q.antiderivative().integrate(0, 1) == q.antiderivative().antiderivative()(Rational(1)));
        CHECK(q.integrate(0, 1) == Rational(0));
        CHECK(p(0.25) == doctest::Approx(1.5));
    }
}
