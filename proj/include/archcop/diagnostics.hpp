#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "archcop/copula.hpp"
#include "archcop/generator.hpp"

namespace archcop {

// Pass thresholds of the validity audit.
inline constexpr double kBoundaryTolerance = 1e-12;
inline constexpr double kMarginTolerance = 1e-12;
inline constexpr double kCellVolumeTolerance = 1e-12;  // min volume must be >= -this
inline constexpr double kSingularityTolerance = 1e-8;
inline constexpr int kGeneratorProbeCount = 64;

struct SingularityProbe {
    double u = 0.0;
    double ratio = 0.0;  // phi(u) / phi'(u)
};

/// Audit of one copula on the uniform (grid_n + 1)^2 lattice over [0,1]^2.
struct ValidityReport {
    FamilyId family = FamilyId::Independence;
    double alpha = 1.0;  // the family parameter (theta for the Gumbel reference)
    int grid_n = 0;
    double boundary_max_abs_err = 0.0;  // max |C(0,v)|, |C(u,0)|
    double margin_max_abs_err = 0.0;    // max |C(1,v) - v|, |C(u,1) - u|
    double min_cell_volume = 0.0;
    std::vector<SingularityProbe> singularity_probes;  // u = 10^-k, k = 3..9
    ConditionReport generator_conditions;
    std::map<std::string, bool> passed;
    std::map<std::string, double> tolerances;

    bool all_passed() const noexcept;
};

/// grid_n >= 3.
ValidityReport grid_validity_report(const Generator& gen, int grid_n);

/// phi(u)/phi'(u) followed along u = 10^-k, k = 3..12; returns the k = 12
/// value as the estimate of the limit at 0. A copula has a singular component
/// iff that limit is non-zero.
double singularity_limit(const Generator& gen);

enum class TauMethod { ClosedForm, Quadrature, MonteCarlo };

std::string_view tau_method_tag(TauMethod m) noexcept;

struct TauEstimate {
    double tau = 0.0;
    TauMethod method = TauMethod::ClosedForm;
    double error_bound = 0.0;
    std::size_t n = 0;  // sample size, Monte Carlo only
    std::string note;
};

/// F1: 1 - alpha. F2: 1 - alpha^2. F3: the constant 0.20332. Gumbel: 1 - 1/theta.
/// Independence: 0.
TauEstimate kendall_tau_closed(const Generator& gen);

/// tau = 1 + 4 * integral_0^1 phi(u)/phi'(u) du by adaptive quadrature.
/// error_bound is 4x the quadrature error estimate. Throws ConvergenceError.
TauEstimate kendall_tau_quadrature(const Generator& gen, double abs_tol);

inline constexpr std::size_t kMaxConcordancePairs = 50'000;

/// Exact pairwise concordance statistic (O(n^2)); error_bound is the standard
/// error from block_count equal contiguous blocks. Requires block_count >= 5,
/// n >= 10 * block_count, n <= kMaxConcordancePairs (std::length_error).
TauEstimate kendall_tau_mc(std::span<const UnitPair> pairs, int block_count);

/// Alpha-free reference value of the F3 tau, rounded.
inline constexpr double kF3TauReference = 0.20332;

}  // namespace archcop
