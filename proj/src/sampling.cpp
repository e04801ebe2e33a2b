#include "archcop/sampling.hpp"

#include <cmath>

#include "archcop/kernels.hpp"
#include "archcop/numeric.hpp"

namespace archcop {

std::string_view method_tag(SampleMethod m) noexcept {
    return m == SampleMethod::Conditional ? "conditional" : "frailty";
}

SampleMethod parse_sample_method(std::string_view tag) {
    if (tag == "conditional") return SampleMethod::Conditional;
    if (tag == "frailty") return SampleMethod::Frailty;
    throw DomainError("unknown sampling method '" + std::string(tag) +
                      "' (expected conditional|frailty)");
}

double mbur_pdf(double y, double alpha) {
    if (!(y > 0.0 && y < 1.0)) throw DomainError("mbur_pdf requires y in (0,1)");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha out of domain (0,inf)");
    const double inv_a2 = 1.0 / (alpha * alpha);
    return 6.0 * inv_a2 * (1.0 - std::pow(y, inv_a2)) * std::pow(y, 2.0 * inv_a2 - 1.0);
}

double frailty_pdf(double w, double alpha) {
    if (!(w > 0.0)) throw DomainError("frailty_pdf requires w > 0");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha out of domain (0,inf)");
    return 6.0 * alpha * -std::expm1(-alpha * w) * std::exp(-2.0 * alpha * w);
}

FrailtyDraw sample_frailty(double alpha, SplitMix64& rng) {
    const double e1 = rng.exponential();
    const double e2 = rng.exponential();
    return FrailtyDraw{e1 / (2.0 * alpha) + e2 / (3.0 * alpha)};
}

std::vector<double> sample_frailties(double alpha, std::size_t n, std::uint64_t seed) {
    require_param(FamilyId::F3FrailtyRational, DependenceParam{alpha});
    std::vector<double> out(n);
    kernels::fill_frailties(alpha, seed, out);
    return out;
}

SampleBatch sample_conditional(const Generator& gen, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw DomainError("sample size must be >= 1");
    SampleBatch batch{std::vector<UnitPair>(n), gen.family(), gen.param(), seed,
                      SampleMethod::Conditional};
    if (!kernels::fill_conditional(gen, seed, batch.pairs)) {
        throw ConvergenceError("conditional inversion failed to converge");
    }
    return batch;
}

SampleBatch sample_frailty_copula(double alpha, std::size_t n, std::uint64_t seed) {
    require_param(FamilyId::F3FrailtyRational, DependenceParam{alpha});
    if (n == 0) throw DomainError("sample size must be >= 1");
    SampleBatch batch{std::vector<UnitPair>(n), FamilyId::F3FrailtyRational, alpha, seed,
                      SampleMethod::Frailty};
    kernels::fill_frailty_pairs(alpha, seed, batch.pairs);
    return batch;
}

SampleBatch sample(const Generator& gen, SampleMethod method, std::size_t n,
                   std::uint64_t seed) {
    if (method == SampleMethod::Conditional) return sample_conditional(gen, n, seed);
    if (gen.family() != FamilyId::F3FrailtyRational) {
        throw DomainError("frailty sampling is only defined for family f3");
    }
    return sample_frailty_copula(gen.param(), n, seed);
}

}  // namespace archcop
