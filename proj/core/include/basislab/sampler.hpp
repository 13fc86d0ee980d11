#ifndef BASISLAB_SAMPLER_HPP
#define BASISLAB_SAMPLER_HPP

#include <string>
#include <string_view>

#include "basislab/rng.hpp"
#include "basislab/vector.hpp"

namespace basislab {

/// Distribution spec mini-language: kind [":" key "=" value {"," ...}]
/// kinds: gaussian | rademacher_sparse (key k) | geometric (key r) |
/// indicator_random. Example: "geometric:r=0.9".
struct SamplerSpec {
    enum class Kind { Gaussian, RademacherSparse, Geometric, IndicatorRandom };
    Kind kind = Kind::Gaussian;
    int k = 3;       // nonzeros for rademacher_sparse
    double r = 0.5;  // ratio for geometric

    std::string text() const;
};

SamplerSpec parse_sampler(std::string_view text);

class Sampler {
public:
    explicit Sampler(SamplerSpec spec) : spec_(spec) {}
    const SamplerSpec& spec() const { return spec_; }

    /// Draws a vector of length <= max_len (length itself is random).
    FiniteVector draw(Rng& rng, int max_len) const;

    /// Same, but retries until the draw is nonzero.
    FiniteVector draw_nonzero(Rng& rng, int max_len) const;

private:
    SamplerSpec spec_;
};

} // namespace basislab

#endif
