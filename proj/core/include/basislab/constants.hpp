#ifndef BASISLAB_CONSTANTS_HPP
#define BASISLAB_CONSTANTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "basislab/dual.hpp"
#include "basislab/norms.hpp"
#include "basislab/sampler.hpp"
#include "basislab/vector.hpp"

namespace basislab {

enum class SearchMode { Exhaustive, Heuristic };
enum class AverageMode { Exhaustive, MonteCarlo };

std::string_view mode_token(SearchMode m);

/// Enumeration / sampling budgets. Every reported result carries the budget
/// it was produced under.
struct Budgets {
    int window = 32;
    std::size_t subset_cap = 1'000'000;   // subset enumerations
    std::uint64_t sign_cap = 1u << 20;    // exhaustive sign patterns
    int trials = 2000;                    // Monte Carlo / sampler draws
    std::uint64_t seed = 0;
    std::size_t tensor_cap = kDefaultTensorCap;
    int dual_restarts = 32;               // ascent restarts for dual brackets
    int dual_ascent_limit = 16;           // largest support the ascent touches
};

/// A reproducible extremal input: `ratio` must be recomputable from the
/// stored vectors alone (see replay_witness).
struct Witness {
    std::string kind;
    std::map<std::string, double> params;
    std::vector<std::vector<double>> vectors;
    double ratio = 0.0;
};

/// Re-evaluates a witness against the oracle; throws on unknown kind.
double replay_witness(const NormOracle& o, const Witness& w);

/// Empirical bracket for a named constant: certified_lower is a witnessed
/// ratio, the only unconditional claim made about sup-type quantities.
struct ConstantReport {
    std::string name;
    double certified_lower = 0.0;
    double estimate = 0.0;
    std::vector<Witness> witnesses;
    long samples = 0;
    std::uint64_t seed = 0;
};

/// lambda(A) = || sum_{i in A} e_i ||, 1-based indices.
double lambda_of_set(const NormOracle& o, const std::vector<int>& a);

/// Phi(n) = sup { lambda(A) : |A| <= n } explored over the window {1..N}.
/// Exhaustive mode enumerates subsets (|A| = n suffices under
/// 1-unconditionality) and throws CapExceeded past the subset budget;
/// heuristic mode combines block, greedy and random candidates. Either way
/// the result is a certified lower bound for the sup over all of N.
std::pair<double, SearchMode> fundamental_function(const NormOracle& o, int n,
                                                   int window, SearchMode mode,
                                                   const Budgets& budgets = {});

/// Bracket for Phi*(n), the fundamental function of the biorthogonals.
/// Exact for Lp/c0; otherwise the pairing bound n/lambda(n) certifies the
/// lower end and n * ||e_i^*|| the upper.
Bracket dual_fundamental_function(const NormOracle& o, int n,
                                  const Budgets& budgets = {});

/// lambda / Phi / lambda* / Phi* over a window, with per-entry search modes.
struct FundamentalTable {
    int window = 0;
    std::vector<double> lambda;
    std::vector<double> phi;
    std::vector<SearchMode> phi_mode;
    std::vector<Bracket> lambda_star;
    std::vector<Bracket> phi_star;
};

FundamentalTable build_fundamental_table(const NormOracle& o, int window,
                                         const Budgets& budgets = {});

/// Witnessed democracy constant: max Phi(|A|) / lambda(A) over the window
/// (exhaustive when 2^N fits the subset budget, sampled otherwise).
ConstantReport democracy_constant(const NormOracle& o, int window,
                                  const Budgets& budgets = {});

/// Witnessed constant-coefficient unconditionality constant on A = {1..n}:
/// max over sign patterns of max(r/lambda, lambda/r), r = ||sum +-e_i||.
ConstantReport ccu_constant(const NormOracle& o, int n, AverageMode mode,
                            const Budgets& budgets = {});

/// Ave_± || sum +- e_i || as (mean, stderr); exhaustive mean is exact with
/// stderr 0, Monte Carlo reports the standard error.
std::pair<double, double> sign_average(const NormOracle& o, int n, AverageMode mode,
                                       int trials, std::uint64_t seed,
                                       std::uint64_t sign_cap = 1u << 20);

/// Per n <= N: bracket for Phi(n) * Phi*(n) / n, with the pairing bound 1
/// enforced from below.
std::vector<Bracket> bidemocracy_profile(const NormOracle& o, int window,
                                         const Budgets& budgets = {});

/// Threshold truncation: keeps exactly the coefficients with |x_i| >= delta.
FiniteVector quasi_greedy_apply(const FiniteVector& x, double delta);

/// Witnessed quasi-greedy constant: max ||G_delta(x)|| / ||x|| over sampled
/// and structured x, with delta running over the realized |x_i| breakpoints.
ConstantReport quasi_greedy_constant(const NormOracle& o, const Sampler& sampler,
                                     int trials, std::uint64_t seed,
                                     int max_len = 13);

} // namespace basislab

#endif
