#include <array>
#include <cmath>

#include "ezeta/zeta.hpp"

namespace ezeta {

double sinpi(double x) {
    if (!std::isfinite(x)) return std::nan("");
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    else if (r < -1.0) r += 2.0;
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(pi * r);
}

double cospi(double x) {
    if (!std::isfinite(x)) return std::nan("");
    double r = std::fabs(std::fmod(x, 2.0));
    if (r > 1.0) r = 2.0 - r;
    if (r == 0.5) return 0.0;
    if (r < 0.25) return std::cos(pi * r);
    return sinpi(0.5 - r);
}

Complex sinpi(Complex z) {
    const double b = pi * z.imag();
    if (z.imag() == 0.0) return {sinpi(z.real()), 0.0};
    return {sinpi(z.real()) * std::cosh(b), cospi(z.real()) * std::sinh(b)};
}

Complex cospi(Complex z) {
    const double b = pi * z.imag();
    if (z.imag() == 0.0) return {cospi(z.real()), 0.0};
    return {cospi(z.real()) * std::cosh(b), -sinpi(z.real()) * std::sinh(b)};
}

namespace {

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_p = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool is_nonpositive_integer(Complex s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

Complex lanczos(Complex z) {
    // Gamma(z) for Re z >= 1/2
    z -= 1.0;
    Complex a = lanczos_p[0];
    for (std::size_t k = 1; k < lanczos_p.size(); ++k) a += lanczos_p[k] / (z + static_cast<double>(k));
    const Complex t = z + lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::exp((z + 0.5) * std::log(t) - t) * a;
}

}  // namespace

Complex gamma(Complex s) {
    if (is_nonpositive_integer(s)) throw PoleError("gamma: pole at nonpositive integer");
    if (s.imag() == 0.0 && s.real() > 0.0 && s.real() <= 20.0 && s.real() == std::floor(s.real())) {
        double f = 1.0;
        for (int k = 2; k < static_cast<int>(s.real()); ++k) f *= k;
        return f;
    }
    if (s.real() < 0.5) return pi / (sinpi(s) * lanczos(1.0 - s));
    return lanczos(s);
}

Complex beta_function(Complex s, Complex t) {
    if (is_nonpositive_integer(s + t)) throw PoleError("beta_function: s + t at a gamma pole");
    return gamma(s) * gamma(t) / gamma(s + t);
}

}  // namespace ezeta
