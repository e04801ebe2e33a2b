#include "archcop/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "archcop/numeric.hpp"
#include "archcop/rng.hpp"
#include "archcop/sampling.hpp"

namespace archcop::kernels {

namespace {

using Index = std::ptrdiff_t;

double cell_volume(std::span<const double> c, std::size_t m, std::size_t i, std::size_t j) {
    return c[(i + 1) * m + j + 1] - c[(i + 1) * m + j] - c[i * m + j + 1] + c[i * m + j];
}

int sign(double x) { return (x > 0.0) - (x < 0.0); }

std::int64_t concordance_row(std::span<const UnitPair> pairs, std::size_t i) {
    std::int64_t acc = 0;
    const UnitPair a = pairs[i];
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        acc += sign(a.u - pairs[j].u) * sign(a.v - pairs[j].v);
    }
    return acc;
}

bool conditional_pair(const Generator& gen, std::uint64_t seed, std::size_t i, UnitPair& out) {
    auto rng = SplitMix64::stream(seed, i);
    const double u = rng.uniform_open();
    const double p = rng.uniform_open();
    const auto root = bisect_monotone(
        [&](double v) { return partial_u(gen, UnitPoint(u, v)); }, p, 0.0, 1.0,
        kConditionalTolerance);
    out = UnitPair{u, root.root};
    return root.converged;
}

// F3 inverse generator: the Laplace transform of the frailty law.
double f3_psi(double alpha, double t) {
    return 6.0 * alpha * alpha / ((t + 2.0 * alpha) * (t + 3.0 * alpha));
}

UnitPair frailty_pair(double alpha, std::uint64_t seed, std::size_t i) {
    auto rng = SplitMix64::stream(seed, i);
    // psi(E/gamma) can round to exactly 1 (or 0) in extreme tails; redraw so the
    // batch stays inside the open square.
    for (;;) {
        const double gamma = sample_frailty(alpha, rng).gamma;
        const double u = f3_psi(alpha, rng.exponential() / gamma);
        const double v = f3_psi(alpha, rng.exponential() / gamma);
        if (u > 0.0 && u < 1.0 && v > 0.0 && v < 1.0) return UnitPair{u, v};
    }
}

double frailty_value(double alpha, std::uint64_t seed, std::size_t i) {
    auto rng = SplitMix64::stream(seed, i);
    return sample_frailty(alpha, rng).gamma;
}

}  // namespace

// ---------------------------------------------------------------------------
// serial reference

namespace serial {

std::vector<double> cdf_lattice(const Generator& gen, std::span<const double> axis) {
    const std::size_t m = axis.size();
    std::vector<double> out(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            out[i * m + j] = cdf(gen, UnitPoint(axis[i], axis[j]));
        }
    }
    return out;
}

std::vector<double> density_lattice(const Generator& gen, std::span<const double> axis) {
    const std::size_t m = axis.size();
    std::vector<double> out(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            out[i * m + j] = density(gen, UnitPoint(axis[i], axis[j]));
        }
    }
    return out;
}

double min_cell_volume(std::span<const double> lattice, std::size_t m) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t j = 0; j + 1 < m; ++j) {
            best = std::min(best, cell_volume(lattice, m, i, j));
        }
    }
    return best;
}

std::int64_t concordance_sum(std::span<const UnitPair> pairs) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) total += concordance_row(pairs, i);
    return total;
}

bool fill_conditional(const Generator& gen, std::uint64_t seed, std::span<UnitPair> out) {
    bool ok = true;
    for (std::size_t i = 0; i < out.size(); ++i) ok &= conditional_pair(gen, seed, i, out[i]);
    return ok;
}

void fill_frailty_pairs(double alpha, std::uint64_t seed, std::span<UnitPair> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = frailty_pair(alpha, seed, i);
}

void fill_frailties(double alpha, std::uint64_t seed, std::span<double> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = frailty_value(alpha, seed, i);
}

}  // namespace serial

// ---------------------------------------------------------------------------
// OpenMP

std::vector<double> cdf_lattice(const Generator& gen, std::span<const double> axis) {
    for (double x : axis) {
        if (!(x >= 0.0 && x <= 1.0)) throw DomainError("lattice axis must lie in [0,1]");
    }
    const auto m = static_cast<Index>(axis.size());
    std::vector<double> out(axis.size() * axis.size());
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < m; ++j) {
            out[static_cast<std::size_t>(i * m + j)] =
                cdf(gen, UnitPoint(axis[static_cast<std::size_t>(i)],
                                   axis[static_cast<std::size_t>(j)]));
        }
    }
    return out;
}

std::vector<double> density_lattice(const Generator& gen, std::span<const double> axis) {
    for (double x : axis) {
        if (!(x > 0.0 && x < 1.0)) throw DomainError("density lattice must be interior");
    }
    const auto m = static_cast<Index>(axis.size());
    std::vector<double> out(axis.size() * axis.size());
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < m; ++j) {
            out[static_cast<std::size_t>(i * m + j)] =
                density(gen, UnitPoint(axis[static_cast<std::size_t>(i)],
                                       axis[static_cast<std::size_t>(j)]));
        }
    }
    return out;
}

double min_cell_volume(std::span<const double> lattice, std::size_t m) {
    double best = std::numeric_limits<double>::infinity();
    const auto cells = static_cast<Index>(m > 0 ? m - 1 : 0);
#pragma omp parallel for schedule(static) reduction(min : best)
    for (Index i = 0; i < cells; ++i) {
        for (Index j = 0; j < cells; ++j) {
            best = std::min(best, cell_volume(lattice, m, static_cast<std::size_t>(i),
                                              static_cast<std::size_t>(j)));
        }
    }
    return best;
}

std::int64_t concordance_sum(std::span<const UnitPair> pairs) {
    std::int64_t total = 0;
    const auto n = static_cast<Index>(pairs.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total)
    for (Index i = 0; i < n; ++i) total += concordance_row(pairs, static_cast<std::size_t>(i));
    return total;
}

bool fill_conditional(const Generator& gen, std::uint64_t seed, std::span<UnitPair> out) {
    int failures = 0;
    const auto n = static_cast<Index>(out.size());
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : failures)
    for (Index i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (!conditional_pair(gen, seed, k, out[k])) ++failures;
    }
    return failures == 0;
}

void fill_frailty_pairs(double alpha, std::uint64_t seed, std::span<UnitPair> out) {
    const auto n = static_cast<Index>(out.size());
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = frailty_pair(alpha, seed, k);
    }
}

void fill_frailties(double alpha, std::uint64_t seed, std::span<double> out) {
    const auto n = static_cast<Index>(out.size());
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = frailty_value(alpha, seed, k);
    }
}

}  // namespace archcop::kernels
