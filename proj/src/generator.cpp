#include "archcop/generator.hpp"

#include <cmath>
#include <limits>

namespace archcop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_unit(double z, const char* what) {
    if (!(z >= 0.0 && z <= 1.0)) {
        throw DomainError(std::string(what) + " must lie in [0,1]");
    }
}

void require_open_unit(double z, const char* what) {
    if (!(z > 0.0 && z < 1.0)) {
        throw DomainError(std::string(what) + " must lie in (0,1)");
    }
}

void require_generator_value(double t) {
    if (!(t >= 0.0)) {
        throw DomainError("generator value must lie in [0,+inf]");
    }
}

// sqrt(1 + 24/z), the recurring term of the F3 generator.
double f3_root(double z) { return std::sqrt(1.0 + 24.0 / z); }

}  // namespace

Generator::Generator(FamilyId family, DependenceParam p)
    : family_(family), param_(p.value) {
    require_param(family, p);
    switch (family_) {
    case FamilyId::F1PowerLog: k_ = 1.0 / param_; break;
    case FamilyId::F2PowerLogSq: k_ = 1.0 / (param_ * param_); break;
    case FamilyId::GumbelRef: k_ = param_; break;
    case FamilyId::Independence:
        param_ = 1.0;
        k_ = 1.0;
        break;
    case FamilyId::F3FrailtyRational: k_ = 1.0; break;
    }
}

std::optional<double> Generator::power_log_exponent() const noexcept {
    if (family_ == FamilyId::F3FrailtyRational) return std::nullopt;
    return k_;
}

double Generator::phi(double z) const {
    require_unit(z, "z");
    if (z == 1.0) return 0.0;
    if (z == 0.0) return kInf;
    if (family_ == FamilyId::F3FrailtyRational) {
        // alpha (s - 5)/2 with s - 5 rewritten to avoid cancellation near z = 1.
        const double s = f3_root(z);
        return 12.0 * param_ * (1.0 - z) / (z * (s + 5.0));
    }
    const double L = -std::log(z);
    switch (family_) {
    case FamilyId::F1PowerLog: return std::pow(param_ * L, k_);
    case FamilyId::Independence: return L;
    default: return std::pow(L, k_);
    }
}

double Generator::phi_prime(double z) const {
    require_open_unit(z, "z");
    if (family_ == FamilyId::F3FrailtyRational) {
        return -6.0 * param_ / (f3_root(z) * z * z);
    }
    const double L = -std::log(z);
    switch (family_) {
    case FamilyId::F1PowerLog: return -std::pow(param_ * L, k_ - 1.0) / z;
    case FamilyId::Independence: return -1.0 / z;
    default: return -k_ * std::pow(L, k_ - 1.0) / z;
    }
}

double Generator::phi_double_prime(double z) const {
    require_open_unit(z, "z");
    if (family_ == FamilyId::F3FrailtyRational) {
        // 12a/(z^3 s) - 72a/(z^4 s^3) = 12a (z + 18) / (z^4 s^3), using z s^2 = z + 24.
        const double s = f3_root(z);
        const double z2 = z * z;
        return 12.0 * param_ * (z + 18.0) / (z2 * z2 * s * s * s);
    }
    const double L = -std::log(z);
    const double z2 = z * z;
    switch (family_) {
    case FamilyId::F1PowerLog:
        return std::pow(param_ * L, k_ - 2.0) * (1.0 - param_ + param_ * L) / z2;
    case FamilyId::Independence: return 1.0 / z2;
    default: return k_ * std::pow(L, k_ - 2.0) * (k_ - 1.0 + L) / z2;
    }
}

double Generator::psi(double t) const {
    require_generator_value(t);
    if (t == 0.0) return 1.0;
    if (t == kInf) return 0.0;
    switch (family_) {
    case FamilyId::F1PowerLog: return std::exp(-std::pow(t, param_) / param_);
    case FamilyId::F2PowerLogSq: return std::exp(-std::pow(t, param_ * param_));
    case FamilyId::GumbelRef: return std::exp(-std::pow(t, 1.0 / param_));
    case FamilyId::Independence: return std::exp(-t);
    case FamilyId::F3FrailtyRational: {
        const double a = param_;
        return 6.0 * a * a / ((t + 2.0 * a) * (t + 3.0 * a));
    }
    }
    return 0.0;
}

// Power-log inverse: with s = (t/c)^(1/k),
//   psi' = -psi s / (k t),   psi'' = psi s (s + k - 1) / (k^2 t^2).
double Generator::psi_prime(double t) const {
    require_generator_value(t);
    if (t == kInf) return 0.0;
    if (family_ == FamilyId::F3FrailtyRational) {
        const double a = param_;
        const double p = (t + 2.0 * a) * (t + 3.0 * a);
        return -6.0 * a * a * (2.0 * t + 5.0 * a) / (p * p);
    }
    if (t == 0.0) {
        if (k_ == 1.0) return -1.0;
        throw DomainError("psi' is unbounded at t = 0");
    }
    const double s = family_ == FamilyId::F1PowerLog ? std::pow(t, param_) / param_
                                                    : std::pow(t, 1.0 / k_);
    return -std::exp(-s) * s / (k_ * t);
}

double Generator::psi_double_prime(double t) const {
    require_generator_value(t);
    if (t == kInf) return 0.0;
    if (family_ == FamilyId::F3FrailtyRational) {
        // 12a (1/A^3 - 1/B^3) with A = t + 2a, B = t + 3a, B - A = a.
        const double a = param_;
        const double A = t + 2.0 * a;
        const double B = t + 3.0 * a;
        const double A3 = A * A * A;
        const double B3 = B * B * B;
        return 12.0 * a * a * (A * A + A * B + B * B) / (A3 * B3);
    }
    if (t == 0.0) {
        if (k_ == 1.0) return 1.0;
        throw DomainError("psi'' is unbounded at t = 0");
    }
    const double s = family_ == FamilyId::F1PowerLog ? std::pow(t, param_) / param_
                                                    : std::pow(t, 1.0 / k_);
    return std::exp(-s) * s * (s + k_ - 1.0) / (k_ * k_ * t * t);
}

double Generator::phi_ratio(double z) const {
    require_unit(z, "z");
    if (z == 0.0 || z == 1.0) return 0.0;
    if (family_ == FamilyId::F3FrailtyRational) {
        const double s = f3_root(z);
        return -2.0 * z * (1.0 - z) * s / (s + 5.0);
    }
    return z * std::log(z) / k_;
}

bool ConditionReport::all_passed() const noexcept {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return !checks.empty();
}

std::vector<double> generator_probe_points(int probe_count) {
    if (probe_count < 3) throw DomainError("probe_count must be >= 3");
    const int n_lo = (probe_count + 1) / 2;
    const int n_hi = probe_count - n_lo;
    std::vector<double> z;
    z.reserve(static_cast<std::size_t>(probe_count));
    const double lo0 = std::log(1e-12), lo1 = std::log(0.5);
    for (int i = 0; i < n_lo; ++i) {
        z.push_back(std::exp(lo0 + (lo1 - lo0) * i / (n_lo - 1)));
    }
    const double hi0 = std::log(1e-3);
    for (int i = 0; i < n_hi; ++i) {
        z.push_back(1.0 - std::exp(hi0 + (lo1 - hi0) * i / n_hi));
    }
    return z;
}

ConditionReport check_generator_conditions(const Generator& gen, int probe_count) {
    const auto probes = generator_probe_points(probe_count);

    ConditionCheck decreasing{"decreasing", true, probes.front(), -kInf};
    ConditionCheck convex{"convex", true, probes.front(), kInf};
    for (double z : probes) {
        const double d1 = gen.phi_prime(z);
        const double d2 = gen.phi_double_prime(z);
        if (!(d1 < 0.0)) decreasing.passed = false;
        if (!(d2 > 0.0)) convex.passed = false;
        // track the value nearest the violating side (NaN always wins)
        if (std::isnan(d1) || d1 > decreasing.worst_value) {
            decreasing.worst_value = d1;
            decreasing.worst_z = z;
        }
        if (std::isnan(d2) || d2 < convex.worst_value) {
            convex.worst_value = d2;
            convex.worst_z = z;
        }
    }

    const double at_one = gen.phi(1.0);
    ConditionCheck one{"phi_one_is_zero", at_one == 0.0, 1.0, at_one};

    ConditionCheck diverge{"diverges_at_zero", gen.phi(0.0) == kInf, 0.0, 0.0};
    double prev = gen.phi(0.1);
    for (int j = 2; j <= 300 && diverge.passed; ++j) {
        const double z = std::pow(10.0, -j);
        const double cur = gen.phi(z);
        if (!(cur > prev) && !(cur == kInf && prev == kInf)) {
            diverge.passed = false;
            diverge.worst_z = z;
        }
        prev = cur;
    }
    const double growth = gen.phi(1e-300) / gen.phi(0.5);
    if (diverge.passed) {
        diverge.worst_z = 1e-300;
        diverge.passed = growth >= 100.0;
    }
    diverge.worst_value = growth;

    return ConditionReport{{decreasing, convex, one, diverge}};
}

ConditionReport check_generator_conditions(FamilyId family, DependenceParam p,
                                           int probe_count) {
    return check_generator_conditions(Generator(family, p), probe_count);
}

}  // namespace archcop
