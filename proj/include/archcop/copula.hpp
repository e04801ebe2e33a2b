#pragma once

#include "archcop/generator.hpp"

namespace archcop {

/// A (u,v) observation, e.g. one draw of a copula sample.
struct UnitPair {
    double u = 0.0;
    double v = 0.0;
};

/// A point of the closed unit square. Construction outside [0,1]^2 throws.
class UnitPoint {
public:
    UnitPoint(double u, double v);

    double u() const noexcept { return u_; }
    double v() const noexcept { return v_; }
    bool interior() const noexcept { return u_ > 0.0 && u_ < 1.0 && v_ > 0.0 && v_ < 1.0; }

private:
    double u_;
    double v_;
};

/// Joint CDF C(u,v) = psi(phi(u) + phi(v)).
///
/// Boundaries short-circuit before any transcendental call: C = 0 when either
/// coordinate is 0, C = v when u = 1 and C = u when v = 1. Power-log families
/// combine the two generator values in scaled form, (L_u^k + L_v^k)^(1/k) with
/// L = -ln, so that neither the scale c nor the k-th powers can underflow.
/// The result is exactly symmetric in (u,v).
double cdf(const Generator& gen, UnitPoint pt);

/// dC/du = psi'(phi(u) + phi(v)) phi'(u), the conditional distribution of V
/// given U = u. Requires u in (0,1); returns exactly 0 at v = 0 and 1 at v = 1.
double partial_u(const Generator& gen, UnitPoint pt);

/// Copula density c(u,v) = psi''(t) phi'(u) phi'(v), t = phi(u) + phi(v).
/// Requires an interior point.
double density(const Generator& gen, UnitPoint pt);

/// exp(-[(-ln u)^theta + (-ln v)^theta]^(1/theta)), evaluated literally.
/// Oracle for cross-family checks; theta >= 1.
double reference_gumbel_cdf(double theta, UnitPoint pt);

}  // namespace archcop
