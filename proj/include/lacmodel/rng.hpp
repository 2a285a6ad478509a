#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace lac::rng {

// Reproducibility note: mt19937_64 output is fully specified by the standard,
// but the std:: distributions are not. All mappings from raw 64-bit draws to
// doubles/integers live here so that identical seeds give identical bytes on
// every platform.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from (seed, purpose, index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s) ^ (purpose * 0xDA942042E4DD58B5ull);
    std::uint64_t b = a + index;
    return splitmix64(b);
}

// Stream purposes (stable; renumbering breaks dataset reproducibility).
inline constexpr std::uint64_t kStreamRow = 1;      // per-row mixture + noise draws
inline constexpr std::uint64_t kStreamSplit = 2;    // split permutation
inline constexpr std::uint64_t kStreamInit = 3;     // network initialization
inline constexpr std::uint64_t kStreamEpoch = 4;    // per-epoch batch shuffle

class Stream {
  public:
    explicit Stream(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1] (safe for log()).
    double uniform_open0() { return 1.0 - uniform01(); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller (two uniforms per pair, second cached).
    double gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = uniform_open0();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    /// Unbiased integer in [0, n), n >= 1.
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do {
            r = gen_();
        } while (r >= lim);
        return r % n;
    }

  private:
    std::mt19937_64 gen_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace lac::rng
