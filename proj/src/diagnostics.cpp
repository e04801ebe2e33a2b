#include "archcop/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "archcop/kernels.hpp"
#include "archcop/numeric.hpp"

namespace archcop {

bool ValidityReport::all_passed() const noexcept {
    if (passed.empty()) return false;
    return std::all_of(passed.begin(), passed.end(), [](const auto& kv) { return kv.second; });
}

ValidityReport grid_validity_report(const Generator& gen, int grid_n) {
    if (grid_n < 3) throw DomainError("grid_n must be >= 3");
    const auto m = static_cast<std::size_t>(grid_n) + 1;
    std::vector<double> axis(m);
    for (std::size_t i = 0; i < m; ++i) axis[i] = static_cast<double>(i) / grid_n;
    axis.back() = 1.0;

    const auto lattice = kernels::cdf_lattice(gen, axis);
    const auto at = [&](std::size_t i, std::size_t j) { return lattice[i * m + j]; };

    ValidityReport r;
    r.family = gen.family();
    r.alpha = gen.param();
    r.grid_n = grid_n;
    for (std::size_t i = 0; i < m; ++i) {
        r.boundary_max_abs_err =
            std::max({r.boundary_max_abs_err, std::abs(at(0, i)), std::abs(at(i, 0))});
        r.margin_max_abs_err = std::max({r.margin_max_abs_err, std::abs(at(m - 1, i) - axis[i]),
                                         std::abs(at(i, m - 1) - axis[i])});
    }
    r.min_cell_volume = kernels::min_cell_volume(lattice, m);
    for (int k = 3; k <= 9; ++k) {
        const double u = std::pow(10.0, -k);
        r.singularity_probes.push_back({u, gen.phi_ratio(u)});
    }
    r.generator_conditions = check_generator_conditions(gen, kGeneratorProbeCount);

    const double limit = singularity_limit(gen);
    r.passed = {
        {"grounded", r.boundary_max_abs_err <= kBoundaryTolerance},
        {"uniform_margins", r.margin_max_abs_err <= kMarginTolerance},
        {"two_increasing", r.min_cell_volume >= -kCellVolumeTolerance},
        {"absolutely_continuous", std::abs(limit) <= kSingularityTolerance},
        {"generator_conditions", r.generator_conditions.all_passed()},
    };
    r.tolerances = {
        {"grounded", kBoundaryTolerance},
        {"uniform_margins", kMarginTolerance},
        {"two_increasing", -kCellVolumeTolerance},
        {"absolutely_continuous", kSingularityTolerance},
    };
    return r;
}

double singularity_limit(const Generator& gen) {
    double last = 0.0;
    for (int k = 3; k <= 12; ++k) last = gen.phi_ratio(std::pow(10.0, -k));
    return last;
}

std::string_view tau_method_tag(TauMethod m) noexcept {
    switch (m) {
    case TauMethod::ClosedForm: return "closed_form";
    case TauMethod::Quadrature: return "quadrature";
    case TauMethod::MonteCarlo: return "monte_carlo";
    }
    return "";
}

TauEstimate kendall_tau_closed(const Generator& gen) {
    const double a = gen.param();
    TauEstimate e;
    e.method = TauMethod::ClosedForm;
    switch (gen.family()) {
    case FamilyId::F1PowerLog:
        e.tau = 1.0 - a;
        e.note = "closed form 1 - alpha";
        break;
    case FamilyId::F2PowerLogSq:
        e.tau = 1.0 - a * a;
        e.note =
            "closed form 1 - alpha^2 (errata: the variant 1 - 2*alpha^2 and tau = -1 at "
            "alpha = 1 disagree with the tau integral and are not used)";
        break;
    case FamilyId::F3FrailtyRational:
        e.tau = kF3TauReference;
        e.error_bound = 1e-3;
        e.note =
            "alpha-free reference constant 0.20332 (quadrature gives 0.203089); the "
            "variants 1 - 2*alpha^2 and 0.32 are errata and are not used";
        break;
    case FamilyId::GumbelRef:
        e.tau = 1.0 - 1.0 / a;
        e.note = "closed form 1 - 1/theta";
        break;
    case FamilyId::Independence:
        e.tau = 0.0;
        e.note = "independence";
        break;
    }
    return e;
}

TauEstimate kendall_tau_quadrature(const Generator& gen, double abs_tol) {
    if (!(abs_tol >= 1e-12)) throw DomainError("abs_tol must be >= 1e-12");
    // The tolerance is on tau = 1 + 4 I, so the integral needs abs_tol / 4.
    const auto q = adaptive_quad([&](double u) { return gen.phi_ratio(u); }, 0.0, 1.0,
                                 abs_tol / 4.0);
    if (!q.converged) {
        throw ConvergenceError("Kendall tau quadrature did not converge (estimate " +
                               std::to_string(1.0 + 4.0 * q.value) + ")");
    }
    TauEstimate e;
    e.method = TauMethod::Quadrature;
    e.tau = std::clamp(1.0 + 4.0 * q.value, -1.0, 1.0);
    e.error_bound = 4.0 * q.abs_error_estimate;
    e.note = "1 + 4 * integral of phi/phi' (" + std::to_string(q.evaluations) + " evaluations)";
    if (gen.family() == FamilyId::F2PowerLogSq) {
        e.note += "; errata: the variant 1 - 2*alpha^2 is not reproduced";
    } else if (gen.family() == FamilyId::F3FrailtyRational) {
        e.note += "; reference constant 0.20332";
    }
    return e;
}

TauEstimate kendall_tau_mc(std::span<const UnitPair> pairs, int block_count) {
    if (block_count < 5) throw DomainError("block_count must be >= 5");
    const std::size_t n = pairs.size();
    const auto blocks = static_cast<std::size_t>(block_count);
    if (n < 10 * blocks) throw DomainError("need at least 10 pairs per block");
    if (n > kMaxConcordancePairs) {
        throw std::length_error("Monte Carlo tau is capped at 50000 pairs");
    }
    const auto pair_count = [](std::size_t m) { return 0.5 * static_cast<double>(m) * (m - 1); };

    TauEstimate e;
    e.method = TauMethod::MonteCarlo;
    e.n = n;
    e.tau = static_cast<double>(kernels::concordance_sum(pairs)) / pair_count(n);

    const std::size_t size = n / blocks;
    std::vector<double> block_tau(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        block_tau[b] = static_cast<double>(kernels::concordance_sum(pairs.subspan(b * size, size))) /
                       pair_count(size);
    }
    double mean = 0.0;
    for (double t : block_tau) mean += t;
    mean /= static_cast<double>(blocks);
    double ss = 0.0;
    for (double t : block_tau) ss += (t - mean) * (t - mean);
    const double sd = std::sqrt(ss / static_cast<double>(blocks - 1));
    e.error_bound = sd / std::sqrt(static_cast<double>(blocks));
    e.note = "pairwise concordance; standard error from " + std::to_string(blocks) +
             " blocks of " + std::to_string(size);
    return e;
}

}  // namespace archcop
