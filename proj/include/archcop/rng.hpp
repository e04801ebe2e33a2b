#pragma once

#include <cmath>
#include <cstdint>

namespace archcop {

/// SplitMix64 generator. Batches never share one sequence: every pair index
/// gets its own stream keyed by (seed, index), so a batch is identical however
/// its indices are scheduled across threads. The algorithm is part of the
/// reproducibility contract and must not change between releases.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static constexpr SplitMix64 stream(std::uint64_t seed, std::uint64_t index) noexcept {
        return SplitMix64(mix(mix(seed) + index));
    }

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform on the open interval (0,1): (top 53 bits + 1/2) * 2^-53.
    constexpr double uniform_open() noexcept {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Unit-rate exponential by inversion, -ln(1 - U).
    double exponential() noexcept { return -std::log1p(-uniform_open()); }

private:
    std::uint64_t state_;
};

}  // namespace archcop
