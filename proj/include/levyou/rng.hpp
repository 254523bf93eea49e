#pragma once

#include <cmath>
#include <cstdint>

namespace levyou {

// Counter-seeded xoshiro256++ stream. Every stream is a pure function of
// (seed, stream_index), so path i of an experiment is reproducible no matter
// how work is distributed over threads. Distribution transforms are written
// out explicitly (instead of std::<random> adaptors) so that output bytes do
// not depend on the standard library implementation.
class SplitRng {
  public:
    SplitRng(std::uint64_t seed, std::uint64_t stream_index) {
        // splitmix64 over the (seed, stream) pair fills the state.
        std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (stream_index + 0x632BE59BD9B4E019ULL));
        for (auto& word : state_) {
            x += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            word = z ^ (z >> 31);
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on the open interval (0,1); never returns 0 or 1.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54; }

    // Uniform on (lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Exp(1), strictly positive.
    double exponential() { return -std::log(uniform()); }

    // Standard normal via Box-Muller; the spare value is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double theta = 6.283185307179586476925286766559 * uniform();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

  private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace levyou
