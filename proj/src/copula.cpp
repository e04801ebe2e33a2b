#include "archcop/copula.hpp"

#include <algorithm>
#include <cmath>

namespace archcop {

namespace {

// (Lu^k + Lv^k)^(1/k) for Lu, Lv > 0 without forming the k-th powers.
double power_sum_root(double Lu, double Lv, double k) {
    const double hi = std::max(Lu, Lv);
    const double lo = std::min(Lu, Lv);
    const double rho = std::pow(lo / hi, k);
    return hi * std::exp(std::log1p(rho) / k);
}

}  // namespace

UnitPoint::UnitPoint(double u, double v) : u_(u), v_(v) {
    if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0)) {
        throw DomainError("point must lie in the closed unit square");
    }
}

double cdf(const Generator& gen, UnitPoint pt) {
    const double u = pt.u();
    const double v = pt.v();
    if (u == 0.0 || v == 0.0) return 0.0;
    if (u == 1.0) return v;
    if (v == 1.0) return u;
    if (const auto k = gen.power_log_exponent()) {
        if (*k == 1.0) return u * v;
        return std::exp(-power_sum_root(-std::log(u), -std::log(v), *k));
    }
    return gen.psi(gen.phi(u) + gen.phi(v));
}

// Power-log: with s = (Lu^k + Lv^k)^(1/k) and r = L/s,
//   dC/du = C r_u^(k-1) / u.
double partial_u(const Generator& gen, UnitPoint pt) {
    const double u = pt.u();
    const double v = pt.v();
    if (!(u > 0.0 && u < 1.0)) throw DomainError("partial_u requires u in (0,1)");
    if (v == 0.0) return 0.0;
    if (v == 1.0) return 1.0;
    if (const auto k = gen.power_log_exponent()) {
        if (*k == 1.0) return v;
        const double Lu = -std::log(u);
        const double s = power_sum_root(Lu, -std::log(v), *k);
        return std::exp(-s) * std::pow(Lu / s, *k - 1.0) / u;
    }
    return gen.psi_prime(gen.phi(u) + gen.phi(v)) * gen.phi_prime(u);
}

// Exponent 1 is the product copula and is returned exactly.
// Power-log: c = C (s + k - 1) (r_u r_v)^(k-1) / (s u v).
double density(const Generator& gen, UnitPoint pt) {
    if (!pt.interior()) throw DomainError("density requires an interior point");
    const double u = pt.u();
    const double v = pt.v();
    if (const auto k = gen.power_log_exponent()) {
        if (*k == 1.0) return 1.0;
        const double Lu = -std::log(u);
        const double Lv = -std::log(v);
        const double s = power_sum_root(Lu, Lv, *k);
        const double r = (Lu / s) * (Lv / s);
        return std::exp(-s) * (s + *k - 1.0) * std::pow(r, *k - 1.0) / (s * (u * v));
    }
    return gen.psi_double_prime(gen.phi(u) + gen.phi(v)) *
           (gen.phi_prime(u) * gen.phi_prime(v));
}

double reference_gumbel_cdf(double theta, UnitPoint pt) {
    if (!(theta >= 1.0) || !std::isfinite(theta)) {
        throw DomainError("theta out of domain [1,inf)");
    }
    const double u = pt.u();
    const double v = pt.v();
    if (u == 0.0 || v == 0.0) return 0.0;
    if (u == 1.0) return v;
    if (v == 1.0) return u;
    if (theta == 1.0) return u * v;
    const double a = std::pow(-std::log(u), theta);
    const double b = std::pow(-std::log(v), theta);
    return std::exp(-std::pow(a + b, 1.0 / theta));
}

}  // namespace archcop
