#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "archcop/family.hpp"

namespace archcop {

/// A numerical routine exhausted its budget without meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

inline constexpr std::size_t kMaxQuadratureEvaluations = 1'000'000;

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a,b].
///
/// The interval with the largest |K15 - G7| is bisected until the summed
/// estimate drops to abs_tol or the evaluation cap is hit. Nodes are strictly
/// interior, so f is never called at a or b. On failure the best estimate is
/// returned with converged = false.
QuadratureResult adaptive_quad(const std::function<double(double)>& f, double a, double b,
                               double abs_tol,
                               std::size_t max_evaluations = kMaxQuadratureEvaluations);

struct RootResult {
    double root = 0.0;
    double residual = 0.0;  // g(root) - target
    int iterations = 0;
    bool converged = false;
};

/// The target is not bracketed by [g(lo), g(hi)].
class BracketError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxBisectionIterations = 200;

/// Bisection for g(x) = target with g non-decreasing on [lo,hi].
///
/// Stops as soon as |g(mid) - target| <= abs_tol or the bracket is no wider
/// than abs_tol. Every returned root is a midpoint, hence strictly inside
/// (lo,hi). Throws BracketError unless g(lo) <= target <= g(hi).
RootResult bisect_monotone(const std::function<double(double)>& g, double target, double lo,
                           double hi, double abs_tol);

/// (f(u+h,v+h) - f(u+h,v-h) - f(u-h,v+h) + f(u-h,v-h)) / (4h^2).
/// Throws DomainError if the stencil leaves the open unit square.
double central_mixed_second(const std::function<double(double, double)>& f, double u,
                            double v, double h);

struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped to [a,b].
GaussLegendreRule gauss_legendre(int n, double a = 0.0, double b = 1.0);

}  // namespace archcop
