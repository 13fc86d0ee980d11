#ifndef BASISLAB_HARNESS_HPP
#define BASISLAB_HARNESS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "basislab/constants.hpp"
#include "basislab/norms.hpp"
#include "basislab/sampler.hpp"

namespace basislab {

/// Witnessed bounds for the two sides of the multiplicative condition:
/// K_upper from max ||a(x)b|| / (||a|| ||b||), K_lower from the reciprocal.
std::pair<ConstantReport, ConstantReport> k_ratio_stats(const NormOracle& o,
                                                        const Sampler& sampler,
                                                        int trials,
                                                        std::uint64_t seed,
                                                        int max_len = 8);

/// u_n = lambda(n^2) / lambda(n)^2 for n = 1..n_max (indicator pairs).
std::vector<double> indicator_family_ratios(const NormOracle& o, int n_max);
/// ||1_n (x) (1,-1)|| / (lambda(n) * ||(1,-1)||) for n = 1..n_max.
std::vector<double> alternating_family_ratios(const NormOracle& o, int n_max);

/// (||a||^n / ||a^n||)^{1/n} for n = 1..n_max; bounded iff the power
/// condition holds with that constant on this input.
std::vector<double> power_condition_profile(const NormOracle& o, const FiniteVector& a,
                                            int n_max,
                                            std::size_t cap = kDefaultTensorCap);

struct LambdaGrid {
    int m_max = 0;
    int n_max = 0;
    std::vector<double> ratios; // row-major, lambda(mn)/(lambda(m)lambda(n))
    double at(int m, int n) const {
        return ratios[static_cast<std::size_t>(m - 1) * n_max + (n - 1)];
    }
};

LambdaGrid lambda_grid(const NormOracle& o, int m_max, int n_max);

struct ExponentFit {
    double p_hat = 0.0;   // +infinity sentinel for the flat regime
    double r_squared = 1.0;
    std::vector<std::pair<int, double>> points; // (n dyadic, lambda(n))
};

/// Least squares on log lambda(2^k) against k log 2; p_hat = 1/slope.
ExponentFit fit_exponent(const FundamentalTable& table);

/// Best witnessed constant in ||sum a_i e_i|| <= K (sum |a_i|^p)^{1/p}.
ConstantReport upper_p_estimate_check(const NormOracle& o, double p,
                                      const Sampler& sampler, int trials,
                                      std::uint64_t seed, int max_len = 12);

/// Dual side: best witnessed constant in ||sum a_i e_i^*||_* <= K ||a||_q,
/// via certified dual-norm lower bounds.
ConstantReport dual_q_estimate_check(const NormOracle& o, double q,
                                     const Sampler& sampler, int trials,
                                     std::uint64_t seed, int max_len = 8);

/// Ave_± || sum_{i<=n} +- e_i || / n for n = 1..N.
std::vector<double> ell1_average_slope(const NormOracle& o, int window,
                                       const Budgets& budgets = {});

struct EltonResult {
    int n = 0;
    double c = 0.0;
    std::vector<int> subset;    // 1-based, largest passing
    double constant = 0.0;      // minimized ||sum a_i e_i|| over the l1-sphere
    double delta1 = 0.0;        // |subset| / n
    std::vector<double> min_point; // coefficients on the subset realizing it
};

/// Largest A in {1..n} whose l1-lower constant clears c. Per subset the
/// constant is the minimum of the norm over the l1-sphere, found by convex
/// descent on each sign face (positive face only when 1-unconditional).
EltonResult elton_subset_search(const NormOracle& o, int n, double c,
                                const Budgets& budgets = {});

struct EquivalenceStats {
    double sup_ratio = 0.0;    // max ||T(a)|| / ||a||  (certified lower bound)
    double recip_ratio = 0.0;  // max ||a|| / ||T(a)||
    Witness sup_witness;
    Witness recip_witness;
    bool identity_ok = true;   // tensor identity self-test
    long samples = 0;
};

/// (e_{mn+i})_i vs (e_i)_i; also replays e_{m+1} (x) a = shift as a self-test.
EquivalenceStats shift_equivalence(const NormOracle& o, int m, int n,
                                   const Sampler& sampler, int trials,
                                   std::uint64_t seed);

/// (e_{2i} - e_{2i-1})_i vs (e_i)_i; replays (sum a_i e_i) (x) (e_2 - e_1).
EquivalenceStats difference_basis_check(const NormOracle& o, const Sampler& sampler,
                                        int trials, std::uint64_t seed,
                                        int max_len = 12);

struct SuiteConfig {
    Budgets budgets;
    SamplerSpec sampler;                  // defaults to gaussian
    double inconsistency_threshold = 3.0; // tool parameter of decision rule (iii)
    double ratio_tol = 1e-6;
    int grid_max = 8;
    int elton_n = 8;
    double elton_c = 0.45;
    int signavg_window = 16;
    int democracy_window = 12;
    int ccu_n = 12;
    int profile_window = 16;
    int shift_m = 1;
    int shift_n = 4;
};

struct CheckRecord {
    std::string name;
    bool skipped = false;
    std::string skip_reason;
    std::string verdict; // free-form summary line
    std::vector<std::pair<std::string, double>> scalars;
    std::vector<std::pair<std::string, Bracket>> brackets;
    std::vector<std::pair<std::string, std::vector<double>>> profiles;
    std::vector<Witness> witnesses;
    double runtime_ms = 0.0;
};

struct SuiteReport {
    SpaceDescriptor space;
    SuiteConfig config;
    std::string classification_hint;
    std::vector<CheckRecord> checks; // sorted by name
};

/// Runs every check at the configured budgets; budget violations become
/// skipped records, never aborts. The classification hint is derived from
/// certified quantities only.
SuiteReport run_suite(const SpaceDescriptor& space, const SuiteConfig& config = {});

} // namespace basislab

#endif
