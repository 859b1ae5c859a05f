#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "ezeta/poly.hpp"
#include "ezeta/zeta.hpp"

namespace ezeta {

void EvalOptions::validate() const {
    if (!(target_abs_tol > 0.0)) throw DomainError("EvalOptions: target_abs_tol must be positive");
    if (em_correction_terms > 30) throw DomainError("EvalOptions: em_correction_terms must be <= 30");
}

std::string to_string(Method m) {
    switch (m) {
        case Method::DirectSeries: return "direct-series";
        case Method::HurwitzDifference: return "hurwitz-difference";
        case Method::HurwitzDifferencePerturbed: return "hurwitz-difference-perturbed";
        case Method::FourierExpansion: return "fourier-expansion";
        case Method::ClosedForm: return "closed-form";
        case Method::FunctionalEquation: return "functional-equation";
        case Method::EulerMaclaurin: return "euler-maclaurin";
        case Method::AcceleratedSeries: return "accelerated-series";
    }
    return "unknown";
}

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr unsigned max_head = 200000;
constexpr double omit_target = 1e-20;

// B_{2k} / (2k)! for k = 0..31
const std::array<long double, 32>& em_coefficients() {
    static const std::array<long double, 32> table = [] {
        std::array<long double, 32> t{};
        for (unsigned k = 0; k < t.size(); ++k)
            t[k] = (bernoulli_number(2 * k) / Rational(factorial(2 * k))).convert_to<long double>();
        return t;
    }();
    return table;
}

// accumulation type: x87 extended precision absorbs the head/tail cancellation at Re s < 0
template <typename S>
struct Wide;
template <>
struct Wide<double> {
    using type = long double;
};
template <>
struct Wide<Complex> {
    using type = std::complex<long double>;
};
template <typename S>
using wide_t = typename Wide<S>::type;

inline double narrow(long double v) { return static_cast<double>(v); }
inline Complex narrow(std::complex<long double> v) {
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// A^{-s} for A > 0
inline long double pow_neg(long double A, long double s) { return std::pow(A, -s); }
inline std::complex<long double> pow_neg(long double A, std::complex<long double> s) {
    return std::exp(-s * std::log(A));
}

inline long double expm1_over(long double u) { return u == 0.0L ? 1.0L : std::expm1(u) / u; }
inline std::complex<long double> expm1_over(std::complex<long double> u) {
    if (std::abs(u) < 1e-10L) return 1.0L + 0.5L * u;
    const long double a = u.real(), b = u.imag();
    const long double sh = std::sin(0.5L * b);
    const std::complex<long double> em1(std::expm1(a) * std::cos(b) - 2.0L * sh * sh, std::exp(a) * std::sin(b));
    return em1 / u;
}

struct Plan {
    unsigned N = 0;
    unsigned M = 0;      // correction terms used
    double omitted = 0;  // first omitted term relative to |A^{-s}|
};

// Smallest head length N such that some k <= M gives a first omitted correction
// below omit_target relative to |(N+a)^{-s}|.
template <typename S>
Plan choose_plan(S s, double a, const EvalOptions& opts) {
    const auto& c = em_coefficients();
    const unsigned M = opts.em_correction_terms;
    auto scan = [&](unsigned N) {
        Plan p;
        p.N = N;
        const double A = N + a;
        double best = std::numeric_limits<double>::infinity();
        S poch = s;  // (s)_{2k-1}
        double Apow = 1.0 / A;
        for (unsigned k = 1; k <= M + 1; ++k) {
            const double r = std::abs(static_cast<double>(c[k])) * std::abs(poch) * Apow;
            if (r < best) {
                best = r;
                p.M = k - 1;
                p.omitted = r;
            }
            if (r <= omit_target) break;
            poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
            Apow /= A * A;
        }
        return p;
    };
    if (opts.em_tail_start > 0) return scan(opts.em_tail_start);
    Plan p;
    for (unsigned N = 0; N <= max_head; N = N < 16 ? N + 1 : N + N / 4) {
        p = scan(N);
        if (p.omitted <= omit_target) return p;
    }
    return p;
}

template <typename S>
struct Partial {
    S value;
    double err;
};

constexpr long double weps = std::numeric_limits<long double>::epsilon();

template <typename S>
Partial<S> hurwitz_em(S s_in, double a_in, const EvalOptions& opts) {
    using W = wide_t<S>;
    const Plan plan = choose_plan(s_in, a_in, opts);
    const auto& c = em_coefficients();
    const W s = W(s_in);
    const long double a = a_in;
    W head = 0.0L;
    long double mag = 0.0L;
    for (unsigned n = 0; n < plan.N; ++n) {
        const W t = pow_neg(n + a, s);
        head += t;
        mag += std::abs(t);
    }
    const long double A = plan.N + a;
    const W Ap = pow_neg(A, s);
    W tail = A * Ap / (s - 1.0L) + 0.5L * Ap;
    W poch = s;
    long double Apow = 1.0L / A;
    for (unsigned k = 1; k <= plan.M; ++k) {
        tail += c[k] * poch * Ap * Apow;
        poch *= (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k));
        Apow /= A * A;
    }
    const W v = head + tail;
    const double err = plan.omitted * static_cast<double>(std::abs(Ap)) +
                       static_cast<double>(8.0L * weps * (mag + std::abs(tail) + std::abs(head))) +
                       eps * static_cast<double>(std::abs(v));
    return {narrow(v), err};
}

// 2^{-s} (zeta(s, x/2) - zeta(s, (x+1)/2)) formed term by term.
template <typename S>
Partial<S> zeta_e_difference(S s_in, double x, const EvalOptions& opts) {
    using W = wide_t<S>;
    const double a_d = 0.5 * x;
    const Plan plan = choose_plan(s_in, a_d, opts);
    const auto& c = em_coefficients();
    const W s = W(s_in);
    const long double a = 0.5L * x;
    W head = 0.0L;
    long double mag = 0.0L;
    for (unsigned n = 0; n < plan.N; ++n) {
        const W t = pow_neg(n + a, s) - pow_neg(n + a + 0.5L, s);
        head += t;
        mag += std::abs(t);
    }
    const long double A = plan.N + a;
    const long double B = A + 0.5L;
    const W Ap = pow_neg(A, s);
    const W Bp = pow_neg(B, s);
    const long double L = -std::log1p(0.5L / A);  // log(A/B)
    W tail = -B * Bp * L * expm1_over((1.0L - s) * L) + 0.5L * (Ap - Bp);
    W poch = s;
    long double Apow = 1.0L / A, Bpow = 1.0L / B;
    for (unsigned k = 1; k <= plan.M; ++k) {
        tail += c[k] * poch * (Ap * Apow - Bp * Bpow);
        poch *= (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k));
        Apow /= A * A;
        Bpow /= B * B;
    }
    const W v = pow_neg(2.0L, s) * (head + tail);
    const double scale = static_cast<double>(std::abs(pow_neg(2.0L, s)));
    const double err = scale * (plan.omitted * static_cast<double>(std::abs(Ap)) +
                                static_cast<double>(8.0L * weps * (mag + std::abs(tail) + std::abs(head)))) +
                       eps * static_cast<double>(std::abs(v));
    return {narrow(v), err};
}

Partial<Complex> zeta_e_any(Complex s, double x, const EvalOptions& opts) {
    if (s.imag() == 0.0) {
        const auto r = zeta_e_difference(s.real(), x, opts);
        return {Complex(r.value, 0.0), r.err};
    }
    return zeta_e_difference(s, x, opts);
}

}  // namespace

ZetaValue hurwitz_zeta(Complex s, double x, const EvalOptions& opts) {
    opts.validate();
    if (!(x > 0.0)) throw DomainError("hurwitz_zeta: x must be positive");
    if (s == Complex(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at s = 1");
    if (s.imag() == 0.0) {
        const auto r = hurwitz_em(s.real(), x, opts);
        return {Complex(r.value, 0.0), r.err, Method::EulerMaclaurin};
    }
    const auto r = hurwitz_em(s, x, opts);
    return {r.value, r.err, Method::EulerMaclaurin};
}

ZetaValue zeta_e(Complex s, double x, const EvalOptions& opts) {
    opts.validate();
    if (!(x > 0.0)) throw DomainError("zeta_e: x must be positive");
    constexpr double h = 1e-6;
    if (std::abs(s - 1.0) < h) {
        // symmetric averages at s +- h and s +- 2h, combined to cancel the h^2 term
        const auto u1 = zeta_e_any(s + h, x, opts), d1 = zeta_e_any(s - h, x, opts);
        const auto u2 = zeta_e_any(s + 2.0 * h, x, opts), d2 = zeta_e_any(s - 2.0 * h, x, opts);
        const Complex a1 = 0.5 * (u1.value + d1.value), a2 = 0.5 * (u2.value + d2.value);
        const double err = 3.0 * std::max({u1.err, d1.err, u2.err, d2.err}) + std::abs(a1 - a2) * 1e-6;
        return {(4.0 * a1 - a2) / 3.0, err, Method::HurwitzDifferencePerturbed};
    }
    const auto r = zeta_e_any(s, x, opts);
    return {r.value, r.err, Method::HurwitzDifference};
}

ZetaValue zeta_e_fourier(Complex s, double x, unsigned long terms) {
    if (!(s.real() < 1.0)) throw DomainError("zeta_e_fourier: requires Re(s) < 1");
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("zeta_e_fourier: requires 0 < x <= 1");
    const Complex w = 1.0 - s;
    Complex sum = 0.0;
    Complex last = 0.0;
    for (unsigned long n = 0; n < terms; ++n) {
        const double odd = 2.0 * n + 1.0;
        // sin((2n+1) pi x + pi s / 2), with the real phase reduced exactly
        const double ph = std::fmod(odd * x, 2.0);
        const Complex arg = ph + 0.5 * s;
        last = sinpi(arg) * std::exp(-w * std::log(odd));
        sum += last;
    }
    const Complex pref = 2.0 * gamma(w) * std::exp(-w * std::log(pi));
    const double odd = 2.0 * terms + 1.0;
    // summation by parts bound for the dropped tail
    const double tail = std::abs(std::exp(-w * std::log(odd))) / std::max(std::fabs(sinpi(x)), 1e-300);
    return {pref * sum, std::abs(pref) * tail, Method::FourierExpansion};
}

Complex g_e(Complex s, double x) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("g_e: requires 0 < x < 1");
    return zeta_e(s, x).value - zeta_e(s, 1.0 - x).value;
}

}  // namespace ezeta
