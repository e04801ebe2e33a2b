#pragma once

// Data-parallel inner loops. The functions in archcop::kernels run under
// OpenMP; archcop::kernels::serial holds the plain-loop reference versions.
// Both produce bitwise-identical results: lattice cells and sample indices are
// computed independently, and the only reductions (min, integer sums) are
// exact regardless of partitioning.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "archcop/copula.hpp"

namespace archcop::kernels {

/// Row-major lattice: out[i * m + j] = C(axis[i], axis[j]), m = axis.size().
std::vector<double> cdf_lattice(const Generator& gen, std::span<const double> axis);
/// Same layout with the density; every axis value must be interior.
std::vector<double> density_lattice(const Generator& gen, std::span<const double> axis);

/// Minimum C-volume over the (m-1)^2 cells of an m x m row-major lattice.
double min_cell_volume(std::span<const double> lattice, std::size_t m);

/// Sum over i < j of sign((u_i - u_j)(v_i - v_j)): concordant minus discordant.
std::int64_t concordance_sum(std::span<const UnitPair> pairs);

/// Conditional-inversion draws; out[i] depends only on (gen, seed, i).
/// Returns false if any root solve failed to converge.
bool fill_conditional(const Generator& gen, std::uint64_t seed, std::span<UnitPair> out);

/// Frailty (Laplace-transform) draws for the F3 copula.
void fill_frailty_pairs(double alpha, std::uint64_t seed, std::span<UnitPair> out);

/// Independent frailty variables gamma_i.
void fill_frailties(double alpha, std::uint64_t seed, std::span<double> out);

namespace serial {

std::vector<double> cdf_lattice(const Generator& gen, std::span<const double> axis);
std::vector<double> density_lattice(const Generator& gen, std::span<const double> axis);
double min_cell_volume(std::span<const double> lattice, std::size_t m);
std::int64_t concordance_sum(std::span<const UnitPair> pairs);
bool fill_conditional(const Generator& gen, std::uint64_t seed, std::span<UnitPair> out);
void fill_frailty_pairs(double alpha, std::uint64_t seed, std::span<UnitPair> out);
void fill_frailties(double alpha, std::uint64_t seed, std::span<double> out);

}  // namespace serial

/// Absolute tolerance of the conditional-inversion root solve.
inline constexpr double kConditionalTolerance = 1e-10;

}  // namespace archcop::kernels
