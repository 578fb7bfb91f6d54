#pragma once

#include <functional>

namespace solvdiff {

// How an integration interval is mapped onto a finite core interval.
//  none            : both endpoints finite, integrate directly
//  map_to_infinity : rational map t/(1-t) absorbing one or two infinite ends
//  sqrt_map        : x = lo + u^2 first (for sqrt-type integrands and
//                    integrable endpoint singularities), then the rational
//                    map if the upper end is infinite
enum class IntervalTransform { none, map_to_infinity, sqrt_map };

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    IntervalTransform transform = IntervalTransform::none;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int panels = 0;

    // value if converged, throws std::runtime_error otherwise
    double require(const char* what = "integral") const;
};

// Adaptive Gauss-Kronrod (G7,K15) with worst-panel-first refinement.
// Infinite endpoints require (or auto-select) a transform.  Non-convergence
// is reported through the flag, never silently swallowed.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const QuadratureSpec& spec = {});

}  // namespace solvdiff
