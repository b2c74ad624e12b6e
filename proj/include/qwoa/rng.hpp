#pragma once

#include <cstdint>
#include <string_view>

namespace qwoa {

/// SplitMix64: a 64-bit counter-based generator (Steele, Lea & Flood 2014).
/// The state is a Weyl sequence counter; each output is a finalizing hash of
/// the counter, so the stream is identical on every platform. Used everywhere
/// a benchmark needs reproducible randomness.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Unbiased integer in [0, bound) by rejection sampling. bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

  private:
    std::uint64_t state_;
};

/// Derives an independent seed for one named purpose from a master seed.
/// The tag and indices are hashed (FNV-1a over the raw bytes) and mixed with
/// the master seed through one SplitMix64 step. Identical inputs give the
/// identical stream on every platform; distinct tags give unrelated streams.
std::uint64_t derive_stream(std::uint64_t master, std::string_view tag);
std::uint64_t derive_stream(std::uint64_t master, std::string_view tag, std::uint64_t a);
std::uint64_t derive_stream(std::uint64_t master, std::string_view tag, std::uint64_t a,
                            std::uint64_t b);
std::uint64_t derive_stream(std::uint64_t master, std::string_view tag, std::uint64_t a,
                            std::uint64_t b, std::uint64_t c);

} // namespace qwoa
