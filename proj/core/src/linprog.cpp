#include "linprog.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace basislab::detail {

namespace {
constexpr double kEps = 1e-9;
constexpr double kPivotEps = 1e-11;
} // namespace

SimplexResult simplex_min_ge(const std::vector<std::vector<double>>& a,
                             const std::vector<double>& b,
                             const std::vector<double>& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    for (double bi : b)
        if (bi < 0.0) throw std::invalid_argument("simplex_min_ge: b must be >= 0");

    // columns: y (n) | surplus (m) | artificial (m) | rhs
    const std::size_t total = n + 2 * m;
    std::vector<std::vector<double>> tab(m, std::vector<double>(total + 1, 0.0));
    std::vector<std::size_t> basic(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
        tab[i][n + i] = -1.0;
        tab[i][n + m + i] = 1.0;
        tab[i][total] = b[i];
        basic[i] = n + m + i;
    }

    auto pivot = [&](std::size_t pr, std::size_t pc) {
        const double pv = tab[pr][pc];
        for (double& v : tab[pr]) v /= pv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pr) continue;
            const double f = tab[i][pc];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= total; ++j) tab[i][j] -= f * tab[pr][j];
        }
        basic[pr] = pc;
    };

    auto run_phase = [&](const std::vector<double>& cost,
                         bool allow_artificials) -> SimplexResult::Status {
        for (int iter = 0; iter < 20000; ++iter) {
            // reduced costs r_j = c_j - c_B^T col_j, recomputed per iteration
            std::size_t enter = total;
            for (std::size_t j = 0; j < total; ++j) {
                if (!allow_artificials && j >= n + m) continue;
                double r = cost[j];
                for (std::size_t i = 0; i < m; ++i)
                    if (cost[basic[i]] != 0.0) r -= cost[basic[i]] * tab[i][j];
                if (r < -kEps) { enter = j; break; } // Bland: smallest index
            }
            if (enter == total) return SimplexResult::Status::Optimal;
            std::size_t leave = m;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < m; ++i) {
                if (tab[i][enter] > kPivotEps) {
                    const double ratio = tab[i][total] / tab[i][enter];
                    if (ratio < best_ratio - kPivotEps ||
                        (ratio < best_ratio + kPivotEps &&
                         (leave == m || basic[i] < basic[leave]))) {
                        best_ratio = ratio;
                        leave = i;
                    }
                }
            }
            if (leave == m) return SimplexResult::Status::Unbounded;
            pivot(leave, enter);
        }
        return SimplexResult::Status::Unbounded; // iteration guard tripped
    };

    // phase 1: drive the artificials to zero
    std::vector<double> cost1(total, 0.0);
    for (std::size_t i = 0; i < m; ++i) cost1[n + m + i] = 1.0;
    if (run_phase(cost1, true) != SimplexResult::Status::Optimal)
        return {SimplexResult::Status::Infeasible, 0.0, {}};
    double art = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        if (basic[i] >= n + m) art += tab[i][total];
    if (art > 1e-7) return {SimplexResult::Status::Infeasible, 0.0, {}};

    // pivot lingering zero-level artificials out where possible
    for (std::size_t i = 0; i < m; ++i) {
        if (basic[i] < n + m) continue;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (std::fabs(tab[i][j]) > kPivotEps) {
                pivot(i, j);
                break;
            }
        }
    }

    std::vector<double> cost2(total, 0.0);
    for (std::size_t j = 0; j < n; ++j) cost2[j] = c[j];
    const auto st = run_phase(cost2, false);
    if (st != SimplexResult::Status::Optimal)
        return {SimplexResult::Status::Unbounded, 0.0, {}};

    SimplexResult out;
    out.status = SimplexResult::Status::Optimal;
    out.y.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (basic[i] < n) out.y[basic[i]] = tab[i][total];
    out.value = 0.0;
    for (std::size_t j = 0; j < n; ++j) out.value += c[j] * out.y[j];
    return out;
}

} // namespace basislab::detail
