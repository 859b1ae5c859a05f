#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ezeta/grid.hpp"
#include "ezeta/poly.hpp"
#include "ezeta/quad.hpp"
#include "ezeta/types.hpp"

namespace ezeta {

enum class IdentityStatus { Asserted, Disputed };
enum class Verdict { Pass, Fail, Skipped };

std::string to_string(IdentityStatus s);
std::string to_string(Verdict v);
IdentityStatus parse_status(const std::string& s);
Verdict parse_verdict(const std::string& s);

/// One side of an identity at one point.
struct SideValue {
    Complex value;
    double est_error = 0.0;
    std::optional<Rational> exact;
    std::optional<QuadratureResult> quad;
    std::vector<std::pair<std::string, double>> aux;

    SideValue() = default;
    SideValue(Complex v, double err = 0.0) : value(v), est_error(err) {}
    static SideValue from_exact(const Rational& r);
    static SideValue from_quad(const QuadratureResult& q);
};

struct EvalContext {
    /// absolute tolerance requested from quadrature on either side
    double quad_abs_tol = 1e-10;
};

using SideEvaluator = std::function<SideValue(const Point&, const EvalContext&)>;

struct IdentitySpec {
    std::string id;
    /// plain-text statement of the identity being checked
    std::string paper_ref;
    SideEvaluator lhs;
    SideEvaluator rhs;
    GridSpec domain;
    /// point used by single checks for axes not given explicitly
    Point defaults;
    double tol_abs = 1e-8;
    double tol_rel = 1e-7;
    IdentityStatus status = IdentityStatus::Asserted;
};

struct QuadMeta {
    double est_error = 0.0;
    unsigned long evaluations = 0;
    unsigned subdivisions = 0;
    bool converged = true;

    friend bool operator==(const QuadMeta&, const QuadMeta&) = default;
};

struct ExactMeta {
    std::string lhs;
    std::string rhs;
    bool equal = false;

    friend bool operator==(const ExactMeta&, const ExactMeta&) = default;
};

struct IdentityCheckReport {
    std::string id;
    IdentityStatus status = IdentityStatus::Asserted;
    Point point;
    Complex lhs_value;
    Complex rhs_value;
    double abs_err = 0.0;
    /// absent when rhs is zero
    std::optional<double> rel_err;
    double tol_abs = 0.0;
    double tol_rel = 0.0;
    std::optional<QuadMeta> quad;
    std::optional<ExactMeta> exact;
    std::vector<std::pair<std::string, double>> aux;
    Verdict verdict = Verdict::Skipped;
    std::string diagnostic;
};

struct Tolerances {
    std::optional<double> abs;
    std::optional<double> rel;
};

/// Evaluate both sides at one point; evaluator failures give Verdict::Skipped.
IdentityCheckReport check_identity(const IdentitySpec& spec, const Point& point, const Tolerances& tol = {});

/// The full identity catalog, sorted by id.
const std::vector<IdentitySpec>& catalog();
/// nullptr if absent
const IdentitySpec* find_identity(const std::string& id);

/// Glob match with * and ?; a comma separates alternative patterns; empty matches all.
bool id_matches(const std::string& pattern, const std::string& id);

struct SuiteOptions {
    std::string filter;
    /// axis name -> replacement values, applied to every selected identity having that axis
    std::map<std::string, std::vector<double>> grids;
    Tolerances tol;
    unsigned jobs = 1;
};

struct SuiteCounts {
    unsigned pass = 0;
    unsigned fail = 0;
    unsigned skipped = 0;
    /// reports of disputed identities, whatever their verdict
    unsigned disputed = 0;
    unsigned disputed_fail = 0;
};

struct SuiteResult {
    std::vector<IdentityCheckReport> reports;
    SuiteCounts counts;
};

/// Deterministic: reports sorted by id, then point. DomainError on an override naming no selected axis.
SuiteResult run_suite(const SuiteOptions& opts);

// closed forms

enum class FourierKind { Sin, Cos };

/// integral of sin or cos((2k+1) pi x) zeta_E(s,x) over [0,1], pole-free form, s <= 0
Complex rhs_fourier_coefficient(FourierKind kind, double s, unsigned k);
/// integral of zeta_E(sp,x) zeta_E(s,x) (or zeta_E(s,1-x) when reflected), s, sp <= 0
Complex rhs_product_integral(double s, double sp, bool reflected);
/// integral of E_{m-1}(x) zeta_E(s,x), s <= 0, m >= 1
Complex rhs_euler_transform(unsigned m, double s);
/// integral of x^n zeta_E(s,x), s <= 0
Complex rhs_moment(unsigned n, double s);
/// integral of x^n E_{m-1}(x) through Euler values at zero, exact, m >= 1
Rational rhs_moment_euler(unsigned n, unsigned m);
/// integral of e^{2 pi t x} zeta_E(s,x), |t| <= 0.45, s <= 0
Complex rhs_exp_transform(double t, double s);
/// (1/2) integral of G_E(s,x) sec(pi x), s <= 0
Complex rhs_secant_transform(double s);

struct BetaEvenSeries {
    double sum = 0.0;
    double last_term = 0.0;
    unsigned terms = 0;
    std::vector<double> term_values;
};
/// Partial sums of the Euler-type series for beta(2m), n = 1..max_n.
BetaEvenSeries rhs_beta_even_series(unsigned m, unsigned max_n);

/// zeta_E(1-s, p/q) from Hurwitz values, 1 <= p <= q
Complex rhs_rational_argument(Complex s, unsigned p, unsigned q);
/// zeta(s, (2p-1)/(2q)) from ell_{E,s}(r/q), 1 <= p < q
Complex rhs_eisenstein(Complex s, unsigned p, unsigned q);

struct ApostolMultiplication {
    Complex lhs;
    Complex rhs;
    double max_component_error = 0.0;
};
/// B_{m+1}(1/2, e^{2 pi i p/q}) against q^m sum_r e^{2(r-1) pi i p/q} B_{m+1}((2r-1)/(2q)), 1 <= p < q
ApostolMultiplication rhs_apostol_multiplication(unsigned m, unsigned p, unsigned q);

/// Abel-regularized sum_n e^{(2n+1) pi i x} (2n+1)^m, i.e. ell_{E,-m}(x), from (z d/dz)^m z/(1-z^2)
/// at z = e^{pi i x} with exact integer coefficients.
Complex lerch_neg_int_abel(unsigned m, double x);

}  // namespace ezeta
