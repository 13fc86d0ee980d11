#ifndef BASISLAB_TSIRELSON_HPP
#define BASISLAB_TSIRELSON_HPP

#include <cstddef>
#include <vector>

#include "basislab/vector.hpp"

namespace basislab {

inline constexpr int kDefaultTsirelsonWindow = 128;
inline constexpr std::size_t kDefaultNormingCap = 200'000;

/// The implicit Tsirelson norm on finite support:
///
///   ||x|| = max( max_i |x_i| ,
///                theta * sup { sum_j ||E_j x|| : k <= min E_1,
///                              E_1 < ... < E_k successive intervals } )
///
/// computed exactly by dynamic programming over intervals; positions are
/// absolute (the admissibility bound k <= min E_1 reads the basis index).
/// Throws CapExceeded when the support exceeds window_cap.
double tsirelson_norm(const FiniteVector& x, double theta,
                      int window_cap = kDefaultTsirelsonWindow);

/// p-convexification: ||x||_{T_p} = || (|x_i|^p)_i ||_T ^ {1/p}.
double pconvex_norm(const FiniteVector& x, double p, double theta,
                    int window_cap = kDefaultTsirelsonWindow);

/// A finite set of functionals whose pointwise max realizes the Tsirelson
/// norm on a window. Nonnegative representatives are stored; evaluation
/// reads |x| (the norm is 1-unconditional), and functionals() expands the
/// +- pairs.
struct NormingFunctionalSet {
    double theta = 0.5;
    int window = 0;
    int depth = 0;
    std::vector<std::vector<double>> reps; // nonnegative, dense on [1..window]

    std::size_t rep_count() const { return reps.size(); }
    std::vector<Functional> functionals() const;

    /// max over the set of <g, |x|>; a lower truncation of the Tsirelson
    /// norm, exact once depth >= window.
    double evaluate(const FiniteVector& x) const;
};

/// Level 0 holds e_i^* (i <= window); level k+1 adds theta * (f_1 + ... + f_j)
/// over admissible tuples with successive supports, j <= min support(f_1).
/// Unary tuples are dominated and skipped. Throws CapExceeded past `cap`.
NormingFunctionalSet generate_norming_set(double theta, int window, int depth,
                                          std::size_t cap = kDefaultNormingCap);

} // namespace basislab

#endif
