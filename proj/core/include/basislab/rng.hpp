#ifndef BASISLAB_RNG_HPP
#define BASISLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace basislab {

/// Deterministic random source. All distributions are mapped from the raw
/// engine by hand so identical seeds give identical streams on every
/// platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(eng_() % range);
    }

    int sign() { return (eng_() & 1u) ? 1 : -1; }

    /// Standard normal via Box-Muller, pair-cached.
    double normal();

private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Stable per-check seed derivation: FNV-1a over the label folded into the
/// master seed, so parallel and sequential execution see the same streams.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label);

} // namespace basislab

#endif
