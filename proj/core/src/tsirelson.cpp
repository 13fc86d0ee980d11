#include "basislab/tsirelson.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "basislab/errors.hpp"

namespace basislab {

namespace {

// Interval DP. T[i][j] is the norm of x restricted to positions [i..j]
// (0-based storage, 1-based admissibility). Intervals suffice: the basis is
// 1-unconditional, so a successive set family is dominated by the family of
// its interval hulls, which keeps min E_1 and hence admissibility.
//
// Per right endpoint j, B[t][c] is the best sum of at most c successive
// interval norms inside [t..j]; a family whose first interval starts at
// 1-based position s may use at most s intervals in total. The k = 1 family
// equal to the whole interval is a no-op (theta < 1) and is excluded, which
// closes the recursion bottom-up with no fixed-point iteration.
double tsirelson_dp(const std::vector<double>& coeffs, double theta) {
    const int n = static_cast<int>(coeffs.size());
    if (n == 0) return 0.0;
    std::vector<double> v(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = std::fabs(coeffs[i]);

    std::vector<double> T(static_cast<std::size_t>(n) * n, 0.0);
    auto t_at = [&](int i, int j) -> double& {
        return T[static_cast<std::size_t>(i) * n + j];
    };

    const int cmax = n;
    std::vector<double> B(static_cast<std::size_t>(n + 2) * (cmax + 1), 0.0);
    auto b_at = [&](int t, int c) -> double& {
        return B[static_cast<std::size_t>(t) * (cmax + 1) + c];
    };
    std::vector<double> suffix_all(static_cast<std::size_t>(n) + 2, 0.0);

    for (int j = 0; j < n; ++j) {
        std::fill(B.begin(), B.end(), 0.0);
        suffix_all[static_cast<std::size_t>(j) + 1] = 0.0;
        double sup = 0.0;
        for (int i = j; i >= 0; --i) {
            sup = std::max(sup, v[static_cast<std::size_t>(i)]);
            // sup is over [i..j] because i only decreases within this j pass
            const int allow = std::min(i, cmax); // 1-based position i+1, minus the first interval
            double first_here_trunc = 0.0;       // first interval [i..e], e < j
            for (int e = i; e < j; ++e)
                first_here_trunc =
                    std::max(first_here_trunc, t_at(i, e) + b_at(e + 1, allow));
            const double best =
                std::max(first_here_trunc, suffix_all[static_cast<std::size_t>(i) + 1]);
            t_at(i, j) = std::max(sup, theta * best);

            const double first_here_all = std::max(first_here_trunc, t_at(i, j));
            suffix_all[static_cast<std::size_t>(i)] =
                std::max(first_here_all, suffix_all[static_cast<std::size_t>(i) + 1]);

            b_at(i, 0) = 0.0;
            for (int c = 1; c <= cmax; ++c) {
                double bb = b_at(i + 1, c);
                for (int e = i; e <= j; ++e)
                    bb = std::max(bb, t_at(i, e) + b_at(e + 1, c - 1));
                b_at(i, c) = bb;
            }
        }
    }
    return t_at(0, n - 1);
}

} // namespace

double tsirelson_norm(const FiniteVector& x, double theta, int window_cap) {
    if (theta <= 0.0 || theta >= 1.0)
        throw std::invalid_argument("tsirelson_norm: theta must lie in (0,1)");
    if (static_cast<int>(x.length()) > window_cap)
        throw CapExceeded("tsirelson_norm: support " + std::to_string(x.length()) +
                          " exceeds window cap " + std::to_string(window_cap));
    return tsirelson_dp(x.coeffs(), theta);
}

double pconvex_norm(const FiniteVector& x, double p, double theta, int window_cap) {
    if (p < 1.0) throw std::invalid_argument("pconvex_norm: p must be >= 1");
    std::vector<double> powered(x.length());
    for (std::size_t i = 0; i < x.length(); ++i)
        powered[i] = std::pow(std::fabs(x[i]), p);
    const double t = tsirelson_norm(FiniteVector(std::move(powered)), theta, window_cap);
    return std::pow(t, 1.0 / p);
}

std::vector<Functional> NormingFunctionalSet::functionals() const {
    std::vector<Functional> out;
    out.reserve(reps.size() * 2);
    for (const auto& g : reps) {
        out.emplace_back(g);
        std::vector<double> neg(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
        out.emplace_back(std::move(neg));
    }
    return out;
}

double NormingFunctionalSet::evaluate(const FiniteVector& x) const {
    double best = 0.0;
    for (const auto& g : reps) {
        double s = 0.0;
        const std::size_t m = std::min(g.size(), x.length());
        for (std::size_t i = 0; i < m; ++i) s += g[i] * std::fabs(x[i]);
        best = std::max(best, s);
    }
    return best;
}

NormingFunctionalSet generate_norming_set(double theta, int window, int depth,
                                          std::size_t cap) {
    if (theta <= 0.0 || theta >= 1.0)
        throw std::invalid_argument("generate_norming_set: theta must lie in (0,1)");
    if (window < 1)
        throw std::invalid_argument("generate_norming_set: window must be >= 1");

    struct Rep {
        std::vector<double> coeffs;
        int lo;  // 1-based min support
        int hi;  // 1-based max support
    };

    std::vector<Rep> reps;
    std::map<std::vector<double>, bool> seen;
    auto add = [&](std::vector<double> c, int lo, int hi) -> bool {
        auto [it, inserted] = seen.emplace(c, true);
        if (!inserted) return false;
        if (reps.size() >= cap)
            throw CapExceeded("generate_norming_set: functional cap " +
                              std::to_string(cap) + " exceeded");
        reps.push_back({std::move(c), lo, hi});
        return true;
    };

    for (int i = 1; i <= window; ++i) {
        std::vector<double> c(static_cast<std::size_t>(window), 0.0);
        c[static_cast<std::size_t>(i) - 1] = 1.0;
        add(std::move(c), i, i);
    }

    for (int level = 1; level <= depth; ++level) {
        const std::size_t frozen = reps.size();
        std::vector<std::vector<double>> fresh;
        // tuples f_1 < ... < f_j with successive supports, 2 <= j <= lo(f_1);
        // unary tuples are dominated by f_1 itself and add nothing to the max
        struct Frame {
            std::vector<double> sum;
            int count;
            int max_count;
            int next_min;
        };
        auto extend = [&](auto&& self, Frame& fr) -> void {
            if (fr.count >= 2) {
                std::vector<double> scaled(fr.sum.size());
                for (std::size_t t = 0; t < fr.sum.size(); ++t)
                    scaled[t] = theta * fr.sum[t];
                fresh.push_back(std::move(scaled));
            }
            if (fr.count == fr.max_count) return;
            for (std::size_t r = 0; r < frozen; ++r) {
                if (reps[r].lo < fr.next_min) continue;
                Frame nxt;
                nxt.sum = fr.sum;
                for (std::size_t t = 0; t < nxt.sum.size(); ++t)
                    nxt.sum[t] += reps[r].coeffs[t];
                nxt.count = fr.count + 1;
                nxt.max_count = fr.max_count;
                nxt.next_min = reps[r].hi + 1;
                self(self, nxt);
            }
        };
        for (std::size_t r = 0; r < frozen; ++r) {
            Frame fr;
            fr.sum = reps[r].coeffs;
            fr.count = 1;
            fr.max_count = reps[r].lo; // k <= min support(f_1)
            fr.next_min = reps[r].hi + 1;
            extend(extend, fr);
        }
        bool grew = false;
        for (auto& c : fresh) {
            int lo = 0, hi = 0;
            for (int t = 1; t <= window; ++t)
                if (c[static_cast<std::size_t>(t) - 1] != 0.0) {
                    if (lo == 0) lo = t;
                    hi = t;
                }
            grew |= add(std::move(c), lo, hi);
        }
        if (!grew) break; // closure reached early
    }

    NormingFunctionalSet out;
    out.theta = theta;
    out.window = window;
    out.depth = depth;
    out.reps.reserve(reps.size());
    for (auto& r : reps) out.reps.push_back(std::move(r.coeffs));
    return out;
}

} // namespace basislab
