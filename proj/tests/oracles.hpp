#pragma once

// Test-only oracles. Everything here is written from the textbook formulas in
// extended precision and shares no code path with the library beyond the
// FamilyId enum.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "archcop/copula.hpp"
#include "archcop/family.hpp"

namespace oracle {

using archcop::FamilyId;
using Real = long double;

/// Literal generator formulas.
inline Real phi(FamilyId f, Real a, Real z) {
    switch (f) {
    case FamilyId::F1PowerLog: return std::pow(-a * std::log(z), 1.0L / a);
    case FamilyId::F2PowerLogSq: return std::pow(-std::log(z), 1.0L / (a * a));
    case FamilyId::F3FrailtyRational: return a * (-5.0L + std::sqrt(1.0L + 24.0L / z)) / 2.0L;
    case FamilyId::GumbelRef: return std::pow(-std::log(z), a);
    case FamilyId::Independence: return -std::log(z);
    }
    return 0;
}

/// Literal inverse-generator formulas.
inline Real psi(FamilyId f, Real a, Real t) {
    switch (f) {
    case FamilyId::F1PowerLog: return std::exp(-std::pow(t, a) / a);
    case FamilyId::F2PowerLogSq: return std::exp(-std::pow(t, a * a));
    case FamilyId::F3FrailtyRational: return 6.0L * a * a / (t * t + 5.0L * a * t + 6.0L * a * a);
    case FamilyId::GumbelRef: return std::exp(-std::pow(t, 1.0L / a));
    case FamilyId::Independence: return std::exp(-t);
    }
    return 0;
}

/// Central first difference with relative step.
inline Real d1(const std::function<Real(Real)>& f, Real x, Real rel = 1e-6L) {
    const Real h = rel * x;
    return (f(x + h) - f(x - h)) / (2.0L * h);
}

/// Central second difference with relative step.
inline Real d2(const std::function<Real(Real)>& f, Real x, Real rel = 1e-4L) {
    const Real h = rel * x;
    return (f(x + h) - 2.0L * f(x) + f(x - h)) / (h * h);
}

/// F3 CDF in the alpha-free reduced form 24 / ((su + sv - 6)(su + sv - 4)).
inline Real f3_reduced_cdf(Real u, Real v) {
    const Real s = std::sqrt(1.0L + 24.0L / u) + std::sqrt(1.0L + 24.0L / v);
    return 24.0L / ((s - 6.0L) * (s - 4.0L));
}

/// Mixed central difference of a CDF, long-double stencil.
inline Real mixed(const std::function<Real(Real, Real)>& c, Real u, Real v, Real h) {
    return (c(u + h, v + h) - c(u + h, v - h) - c(u - h, v + h) + c(u - h, v - h)) /
           (4.0L * h * h);
}

/// Literal Archimedean CDF psi(phi(u) + phi(v)).
inline Real cdf(FamilyId f, Real a, Real u, Real v) { return psi(f, a, phi(f, a, u) + phi(f, a, v)); }

/// Composite Simpson rule with n (even) panels.
inline Real simpson(const std::function<Real(Real)>& f, Real lo, Real hi, int n) {
    const Real h = (hi - lo) / n;
    Real s = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0L : 2.0L) * f(lo + i * h);
    return s * h / 3.0L;
}

/// Kendall tau by counting concordant and discordant pairs separately.
inline double brute_force_tau(const std::vector<archcop::UnitPair>& p) {
    long long conc = 0, disc = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double du = p[i].u - p[j].u;
            const double dv = p[i].v - p[j].v;
            if (du * dv > 0) ++conc;
            if (du * dv < 0) ++disc;
        }
    }
    const double pairs = 0.5 * static_cast<double>(p.size()) * static_cast<double>(p.size() - 1);
    return static_cast<double>(conc - disc) / pairs;
}

/// One-sample Kolmogorov-Smirnov statistic against U(0,1).
inline double ks_uniform(std::vector<double> x) {
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        d = std::max(d, std::max((i + 1) / n - x[i], x[i] - i / n));
    }
    return d;
}

/// Asymptotic KS critical value at level 0.001: 1.9495 / sqrt(n).
inline double ks_critical_001(std::size_t n) { return 1.9495 / std::sqrt(static_cast<double>(n)); }

}  // namespace oracle
