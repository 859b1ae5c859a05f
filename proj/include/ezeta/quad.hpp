#pragma once

#include <functional>
#include <vector>

#include "ezeta/types.hpp"

namespace ezeta {

struct QuadratureResult {
    Complex value;
    double est_error = 0.0;
    unsigned long evaluations = 0;
    unsigned subdivisions = 0;
    bool converged = false;
};

struct EndpointHint {
    bool singular = false;
    /// integrand ~ u^{theta-1} at distance u from the endpoint
    double theta = 1.0;
};

struct IntegrandSpec {
    std::function<Complex(double)> evaluator;
    /// strictly interior, sorted, distinct
    std::vector<double> split_points;
    EndpointHint left;
    EndpointHint right;

    void validate() const;
};

inline constexpr unsigned max_subdivisions = 4096;

/// Adaptive integral over [0,1]: G7-K15 on smooth panels, tanh-sinh on panels
/// that touch a split point or a flagged endpoint.
QuadratureResult integrate_unit(const IntegrandSpec& f, double abs_tol, double rel_tol);

/// As integrate_unit, after pre-partitioning into at least 4 * frequency_hint panels.
QuadratureResult integrate_oscillatory(const IntegrandSpec& f, unsigned frequency_hint, double abs_tol,
                                       double rel_tol = 0.0);

}  // namespace ezeta
