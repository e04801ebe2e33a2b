#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "archcop/copula.hpp"
#include "archcop/rng.hpp"

namespace archcop {

enum class SampleMethod { Conditional, Frailty };

std::string_view method_tag(SampleMethod m) noexcept;
SampleMethod parse_sample_method(std::string_view tag);

/// A reproducible batch: (family, alpha, seed, method, n) determines pairs
/// exactly. Every coordinate is strictly inside (0,1).
struct SampleBatch {
    std::vector<UnitPair> pairs;
    FamilyId family = FamilyId::Independence;
    double alpha = 1.0;
    std::uint64_t seed = 0;
    SampleMethod method = SampleMethod::Conditional;
};

struct FrailtyDraw {
    double gamma = 0.0;
};

/// Median-based unit Rayleigh density (6/a^2)(1 - y^(1/a^2)) y^(2/a^2 - 1),
/// y in (0,1), a > 0.
double mbur_pdf(double y, double alpha);

/// Frailty density 6a (1 - e^(-a w)) e^(-2 a w), w > 0: the MBUR law pushed
/// through w = -ln(y)/a^3.
double frailty_pdf(double w, double alpha);

/// The frailty density equals 6a(e^(-2aw) - e^(-3aw)), the law of
/// E1/(2a) + E2/(3a) for independent unit exponentials. Its Laplace transform
/// is the F3 inverse generator.
FrailtyDraw sample_frailty(double alpha, SplitMix64& rng);

/// n frailty draws, draw i from stream (seed, i).
std::vector<double> sample_frailties(double alpha, std::size_t n, std::uint64_t seed);

/// Conditional-distribution sampling, valid for every family: u uniform,
/// p uniform, v solves dC/du(u, v) = p by bisection to 1e-10.
/// Throws ConvergenceError if a root solve fails (a defect for these families).
SampleBatch sample_conditional(const Generator& gen, std::size_t n, std::uint64_t seed);

/// Marshall-Olkin frailty sampling of F3: gamma ~ frailty law,
/// (u,v) = (psi(E1/gamma), psi(E2/gamma)).
SampleBatch sample_frailty_copula(double alpha, std::size_t n, std::uint64_t seed);

/// Dispatch on method; Frailty is only defined for F3 (DomainError otherwise).
SampleBatch sample(const Generator& gen, SampleMethod method, std::size_t n,
                   std::uint64_t seed);

}  // namespace archcop
