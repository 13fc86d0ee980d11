#ifndef BASISLAB_LINPROG_HPP
#define BASISLAB_LINPROG_HPP

#include <vector>

namespace basislab::detail {

struct SimplexResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    double value = 0.0;
    std::vector<double> y;
};

/// Minimizes c.y subject to A y >= b, y >= 0, with b >= 0 componentwise.
/// Dense two-phase tableau simplex with Bland's rule. Sized for few rows
/// (norm windows) and many columns (norming functionals).
SimplexResult simplex_min_ge(const std::vector<std::vector<double>>& a,
                             const std::vector<double>& b,
                             const std::vector<double>& c);

} // namespace basislab::detail

#endif
