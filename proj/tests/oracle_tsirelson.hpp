#ifndef BASISLAB_TESTS_ORACLE_TSIRELSON_HPP
#define BASISLAB_TESTS_ORACLE_TSIRELSON_HPP

#include <vector>

// Exhaustive Tsirelson evaluators used to freeze expected values. Both are
// deliberately independent of the production dynamic program:
//
//  * the set oracle runs the least-fixed-point recursion over admissible
//    families of successive SETS, memoized on subsets of the support
//    (feasible up to ~13 support points);
//
//  * the interval oracle enumerates admissible interval-family trees
//    top-down with plain memoization, no per-endpoint table sharing.
namespace oracle {

double tsirelson_set_norm(const std::vector<int>& positions,
                          const std::vector<double>& coeffs, double theta);

double tsirelson_interval_norm(const std::vector<double>& coeffs, double theta);

/// One window-N evaluation of the interval oracle on the indicator yields
/// every prefix norm lambda(1..N).
std::vector<double> tsirelson_interval_prefix_lambdas(int window, double theta);

} // namespace oracle

#endif
