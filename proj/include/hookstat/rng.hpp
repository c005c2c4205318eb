#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace hookstat {

/// Counter-based generator: the state advances by a fixed odd constant and
/// the output is a bijective mix of the state (SplitMix64).  Streams for
/// parallel blocks are derived by hashing (seed, stream index), so any
/// block can be regenerated independently of the others.
class CounterRng {
    std::uint64_t state_;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  public:
    static constexpr std::uint64_t default_seed = 0x853c49e6748fea9bULL;

    explicit CounterRng(std::uint64_t seed) : state_(seed) {}

    static CounterRng stream(std::uint64_t seed, std::uint64_t stream_index) {
        // decorrelate the per-stream starting point from both inputs
        return CounterRng(mix(seed + 0x9e3779b97f4a7c15ULL * (stream_index + 1)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform in (0,1]; never returns 0 so it is safe under log().
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound) by rejection-free scaling (bound is
    /// tiny relative to 2^64 everywhere we use it).
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(next_uniform() * static_cast<double>(bound)) % bound;
    }
};

/// Box-Muller with a cached spare value; explicit formulas keep sampled
/// sequences identical across standard libraries.
class GaussianSampler {
    CounterRng rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;

  public:
    explicit GaussianSampler(CounterRng rng) : rng_(rng) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = rng_.next_uniform();
        const double u2 = rng_.next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }
};

}  // namespace hookstat
