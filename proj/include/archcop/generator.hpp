#pragma once

#include <optional>
#include <string>
#include <vector>

#include "archcop/family.hpp"

namespace archcop {

/// Archimedean generator phi: [0,1] -> [0,+inf] together with its inverse psi.
///
/// Generator values are extended reals: phi(0) and psi(+inf) are exact
/// short-circuits and never evaluate ln(0). Construction validates the
/// parameter against the family's domain, so every method may assume it.
///
/// F1, F2, Gumbel and Independence share the power-log shape
///   phi(z) = c * (-ln z)^k,   psi(t) = exp(-(t/c)^(1/k))
/// with (c, k) = (alpha^(1/alpha), 1/alpha), (1, 1/alpha^2), (1, theta), (1, 1).
/// F3 is the rational frailty generator whose inverse is the Laplace
/// transform 6 alpha^2 / ((t + 2 alpha)(t + 3 alpha)).
class Generator {
public:
    Generator(FamilyId family, DependenceParam p);

    FamilyId family() const noexcept { return family_; }
    double param() const noexcept { return param_; }

    /// z in [0,1]. phi(1) = 0 exactly, phi(0) = +inf.
    double phi(double z) const;
    /// z in (0,1). Strictly negative.
    double phi_prime(double z) const;
    /// z in (0,1). Strictly positive.
    double phi_double_prime(double z) const;

    /// t in [0,+inf]. psi(0) = 1, psi(+inf) = 0.
    double psi(double t) const;
    /// t in [0,+inf]; t = 0 is rejected where the derivative is unbounded
    /// (power-log families with k != 1).
    double psi_prime(double t) const;
    double psi_double_prime(double t) const;

    /// phi(z)/phi'(z) in simplified closed form; z in [0,1], with the limit
    /// value 0 at both endpoints. Finite where the raw quotient overflows.
    double phi_ratio(double z) const;

    /// Exponent k of the power-log shape, or nullopt for F3.
    std::optional<double> power_log_exponent() const noexcept;

private:
    FamilyId family_;
    double param_;
    double k_ = 1.0;  // power-log exponent
};

struct ConditionCheck {
    std::string name;
    bool passed = false;
    double worst_z = 0.0;      // probe point where the condition was closest to failing
    double worst_value = 0.0;  // the probed quantity there
};

struct ConditionReport {
    std::vector<ConditionCheck> checks;

    bool all_passed() const noexcept;
};

/// Probe points for the generator audit: half log-spaced from 1e-12 to 0.5,
/// half with 1 - z log-spaced from 1e-3 toward 0.5.
std::vector<double> generator_probe_points(int probe_count);

/// Checks the sufficient generator conditions: phi' < 0 and phi'' > 0 at every
/// probe, phi(1) == 0 exactly, and divergence at 0 (phi(0) == +inf, phi
/// increasing along z = 10^-j, j = 1..300, and phi(1e-300) >= 100 phi(0.5)).
/// probe_count must be >= 3.
ConditionReport check_generator_conditions(const Generator& gen, int probe_count);
ConditionReport check_generator_conditions(FamilyId family, DependenceParam p,
                                           int probe_count);

}  // namespace archcop
