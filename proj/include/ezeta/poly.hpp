#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ezeta/types.hpp"

namespace ezeta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Univariate polynomial with exact rational coefficients, index = power of x.
/// Trailing zero coefficients are trimmed on construction.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Index of the last nonzero coefficient, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coefficient(std::size_t k) const;

    Rational operator()(const Rational& x) const;
    /// Horner evaluation in long double.
    double operator()(double x) const;

    /// p(x + c)
    RationalPolynomial shifted(const Rational& c) const;
    /// Antiderivative with zero constant term.
    RationalPolynomial antiderivative() const;
    Rational integrate(const Rational& a, const Rational& b) const;

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p);
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    static RationalPolynomial monomial(unsigned k, const Rational& c = Rational(1));

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
    std::vector<long double> approx_;
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// B_m, with B_1 = -1/2. Memoized.
Rational bernoulli_number(unsigned m);
/// B_m(x) = sum_k C(m,k) B_k x^{m-k}
RationalPolynomial bernoulli_polynomial(unsigned m);
/// Integer Euler number E_m (coefficients of sech); odd indices vanish. Memoized.
BigInt euler_number(unsigned m);
/// E_m(x) = sum_i C(m,i) E_i/2^i (x-1/2)^{m-i}. Memoized.
RationalPolynomial euler_polynomial(unsigned m);
/// E_m(0) = 2/(m+1) (1 - 2^{m+1}) B_{m+1}
Rational euler_poly_at_zero(unsigned m);

/// Apostol-Bernoulli polynomial B_m(a, alpha) from z e^{az}/(alpha e^z - 1).
/// For alpha within 1e-12 of 1 the classical B_m(a) is returned.
Complex apostol_bernoulli(unsigned m, double a, Complex alpha);

/// (s)_k = s(s+1)...(s+k-1)
Complex pochhammer(Complex s, unsigned k);

/// (1 - 2^{s+1}) / (1 - 2^s); DomainError at s = 0.
double delta2(double s);

/// Fill the Bernoulli/Euler caches up to the given index.
void warm_caches(unsigned max_index);

}  // namespace ezeta
