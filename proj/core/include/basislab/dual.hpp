#ifndef BASISLAB_DUAL_HPP
#define BASISLAB_DUAL_HPP

#include <cstdint>
#include <limits>

#include "basislab/norms.hpp"
#include "basislab/vector.hpp"

namespace basislab {

/// [lower, upper] with lower always certified by a witness; upper may be
/// the +infinity sentinel when no norming machinery applies.
struct Bracket {
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();

    bool upper_is_finite() const { return upper < std::numeric_limits<double>::infinity(); }
};

enum class DualMethod { Exact, Bracket };

struct DualOptions {
    int restarts = 32;
    std::uint64_t seed = 0;
    /// Norming-set LP upper bounds are attempted only when the support of f
    /// fits below this window (generation cost is exponential-ish).
    int lp_window_limit = 10;
    int lp_depth = 0; // 0 = support size (exact closure)
    std::size_t lp_cap = 200'000;
};

/// Hoelder-conjugate dual norm; requires has_exact_dual (Lp, c0).
double dual_norm_exact(const NormOracle& o, const Functional& f);

/// Certified bracket: lower from multi-start ascent of pair(f,x)/||x||
/// (any feasible x certifies); upper from an LP over a norming functional
/// set when one exists (Tsirelson), else the +infinity sentinel.
Bracket dual_norm_bracket(const NormOracle& o, const Functional& f,
                          const DualOptions& opts = {});

/// The ascent's certified lower bound together with the x realizing it.
std::pair<double, std::vector<double>> dual_lower_witnessed(const NormOracle& o,
                                                            const Functional& f,
                                                            const DualOptions& opts = {});

/// Unified entry point: Exact returns a degenerate bracket.
Bracket dual_norm(const NormOracle& o, const Functional& f, DualMethod method,
                  const DualOptions& opts = {});

} // namespace basislab

#endif
