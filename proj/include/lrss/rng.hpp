#pragma once
// Deterministic seeded generator used everywhere randomness is needed, so any
// run is replayable from its seed alone.  SplitMix64 core, rejection sampling
// for bounded draws; no platform-dependent distributions.

#include <cstdint>

#include "lrss/galois.hpp"

namespace lrss {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0, bound), bound >= 1
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t(0)) / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    Fe uniform(const Field& f) { return below(f.order()); }

    Fe uniform_nonzero(const Field& f) { return 1 + below(f.order() - 1); }

  private:
    std::uint64_t state_;
};

}  // namespace lrss
