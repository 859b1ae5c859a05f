#include "ezeta/poly.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace ezeta {

namespace {

// Append-only memo table: concurrent readers, one writer extending the tail.
template <typename T>
class AppendOnlyCache {
public:
    using Extend = std::function<T(const std::vector<T>&)>;

    explicit AppendOnlyCache(Extend extend) : extend_(std::move(extend)) {}

    T get(unsigned m) {
        {
            std::shared_lock lock(mutex_);
            if (m < values_.size()) return values_[m];
        }
        std::unique_lock lock(mutex_);
        while (values_.size() <= m) values_.push_back(extend_(values_));
        return values_[m];
    }

private:
    Extend extend_;
    std::vector<T> values_;
    std::shared_mutex mutex_;
};

AppendOnlyCache<Rational>& bernoulli_cache() {
    static AppendOnlyCache<Rational> cache([](const std::vector<Rational>& b) {
        const unsigned m = static_cast<unsigned>(b.size());
        if (m == 0) return Rational(1);
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        Rational acc = 0;
        for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[k];
        return Rational(-acc / Rational(m + 1));
    });
    return cache;
}

AppendOnlyCache<BigInt>& euler_number_cache() {
    static AppendOnlyCache<BigInt> cache([](const std::vector<BigInt>& e) {
        const unsigned m = static_cast<unsigned>(e.size());
        if (m == 0) return BigInt(1);
        if (m % 2 == 1) return BigInt(0);
        BigInt acc = 0;
        for (unsigned k = 0; k < m; k += 2) acc += binomial(m, k) * e[k];
        return BigInt(-acc);
    });
    return cache;
}

AppendOnlyCache<RationalPolynomial>& euler_poly_cache() {
    static AppendOnlyCache<RationalPolynomial> cache([](const std::vector<RationalPolynomial>& done) {
        const unsigned m = static_cast<unsigned>(done.size());
        // E_m(x) = sum_i C(m,i) E_i / 2^i (x - 1/2)^{m-i}
        const RationalPolynomial shift(std::vector<Rational>{Rational(-1, 2), Rational(1)});
        std::vector<RationalPolynomial> powers{RationalPolynomial::monomial(0)};
        for (unsigned j = 1; j <= m; ++j) powers.push_back(powers.back() * shift);
        RationalPolynomial out;
        for (unsigned i = 0; i <= m; i += 2) {
            Rational c(binomial(m, i) * euler_number(i), BigInt(1) << i);
            out = out + c * powers[m - i];
        }
        return out;
    });
    return cache;
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    approx_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) approx_.push_back(c.convert_to<long double>());
}

Rational RationalPolynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RationalPolynomial::operator()(double x) const {
    long double acc = 0;
    const long double lx = x;
    for (auto it = approx_.rbegin(); it != approx_.rend(); ++it) acc = acc * lx + *it;
    return static_cast<double>(acc);
}

RationalPolynomial RationalPolynomial::shifted(const Rational& c) const {
    // Horner in polynomial arithmetic: p(x+c)
    const RationalPolynomial lin(std::vector<Rational>{c, Rational(1)});
    RationalPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + RationalPolynomial(std::vector<Rational>{*it});
    return acc;
}

RationalPolynomial RationalPolynomial::antiderivative() const {
    std::vector<Rational> out(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k + 1] = coeffs_[k] / Rational(k + 1);
    return RationalPolynomial(std::move(out));
}

Rational RationalPolynomial::integrate(const Rational& a, const Rational& b) const {
    const auto p = antiderivative();
    return p(b) - p(a);
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
    return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) - b.coefficient(k);
    return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p) {
    std::vector<Rational> out(p.coeffs_);
    for (auto& v : out) v *= c;
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::monomial(unsigned k, const Rational& c) {
    std::vector<Rational> out(k + 1);
    out[k] = c;
    return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (mag != 1 || k == 0) os << mag;
        if (k > 0) os << (mag != 1 ? "*x" : "x");
        if (k > 1) os << "^" << k;
        first = false;
    }
    return os.str();
}

BigInt factorial(unsigned n) {
    BigInt out = 1;
    for (unsigned k = 2; k <= n; ++k) out *= k;
    return out;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (unsigned j = 1; j <= k; ++j) out = out * (n - k + j) / j;
    return out;
}

Rational bernoulli_number(unsigned m) { return bernoulli_cache().get(m); }

RationalPolynomial bernoulli_polynomial(unsigned m) {
    std::vector<Rational> c(m + 1);
    for (unsigned k = 0; k <= m; ++k) c[m - k] = Rational(binomial(m, k)) * bernoulli_number(k);
    return RationalPolynomial(std::move(c));
}

BigInt euler_number(unsigned m) { return euler_number_cache().get(m); }

RationalPolynomial euler_polynomial(unsigned m) { return euler_poly_cache().get(m); }

Rational euler_poly_at_zero(unsigned m) {
    const BigInt p = BigInt(1) << (m + 1);
    return Rational(2, m + 1) * Rational(1 - p) * bernoulli_number(m + 1);
}

Complex apostol_bernoulli(unsigned m, double a, Complex alpha) {
    if (std::abs(alpha - 1.0) <= 1e-12) return Complex(to_double(bernoulli_polynomial(m)(Rational(a))), 0.0);
    using LC = std::complex<long double>;
    const LC al(alpha.real(), alpha.imag());
    const LC inv = 1.0L / (al - 1.0L);
    // m a^{m-1} = (alpha - 1) B_m + alpha sum_{k<m} C(m,k) B_k
    std::vector<LC> b(m + 1);
    b[0] = 0;
    std::vector<long double> binom{1.0L};
    long double apow = 1.0L;  // a^{k-1}
    for (unsigned k = 1; k <= m; ++k) {
        std::vector<long double> next(k + 1, 1.0L);
        for (unsigned j = 1; j < k; ++j) next[j] = binom[j - 1] + binom[j];
        binom = std::move(next);
        LC acc = 0;
        for (unsigned j = 0; j < k; ++j) acc += binom[j] * b[j];
        b[k] = (static_cast<long double>(k) * apow - al * acc) * inv;
        apow *= a;
    }
    return Complex(static_cast<double>(b[m].real()), static_cast<double>(b[m].imag()));
}

Complex pochhammer(Complex s, unsigned k) {
    Complex out = 1.0;
    for (unsigned j = 0; j < k; ++j) out *= s + static_cast<double>(j);
    return out;
}

double delta2(double s) {
    if (s == 0.0) throw DomainError("delta2: s must be nonzero");
    return -std::expm1((s + 1) * std::numbers::ln2) / -std::expm1(s * std::numbers::ln2);
}

void warm_caches(unsigned max_index) {
    bernoulli_number(max_index + 1);
    euler_number(max_index);
    euler_polynomial(max_index);
}

}  // namespace ezeta
