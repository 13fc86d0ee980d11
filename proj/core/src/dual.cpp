#include "basislab/dual.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "basislab/errors.hpp"
#include "basislab/rng.hpp"
#include "basislab/tsirelson.hpp"
#include "linprog.hpp"

namespace basislab {

namespace {

double ratio_at(const NormOracle& o, const Functional& f, const std::vector<double>& x) {
    double num = 0.0;
    for (std::size_t i = 0; i < std::min(x.size(), f.length()); ++i) num += f[i] * x[i];
    const double den = o.norm(FiniteVector(x));
    if (den <= 0.0) return 0.0;
    return std::fabs(num) / den;
}

// Coordinate ascent on pair(f,x)/||x||. For 1-unconditional norms the
// search is restricted to the orthant sign-aligned with f and to supp(f).
std::pair<double, std::vector<double>> ascent_lower(const NormOracle& o,
                                                    const Functional& f,
                                                    const DualOptions& opts) {
    const std::size_t n = f.length();
    if (n == 0) return {0.0, {}};
    const bool aligned = o.is_1_unconditional();
    Rng rng(derive_seed(opts.seed, "dual_ascent"));

    auto clamp = [&](std::vector<double>& x) {
        if (!aligned) return;
        for (std::size_t i = 0; i < n; ++i) {
            if (f[i] == 0.0) x[i] = 0.0;
            else if (f[i] > 0.0) x[i] = std::fabs(x[i]);
            else x[i] = -std::fabs(x[i]);
        }
    };

    std::vector<std::vector<double>> starts;
    {
        std::vector<double> s(n, 0.0);
        std::size_t imax = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (std::fabs(f[i]) > std::fabs(f[imax])) imax = i;
        s[imax] = 1.0;
        starts.push_back(s); // best single coordinate
        std::vector<double> ind(n, 0.0), absf(n, 0.0), root(n, 0.0), sq(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (f[i] != 0.0) ind[i] = 1.0;
            absf[i] = std::fabs(f[i]);
            root[i] = std::sqrt(std::fabs(f[i]));
            sq[i] = f[i] * f[i];
        }
        starts.push_back(ind);  // indicator of the support
        starts.push_back(absf); // Hoelder-aligned family
        starts.push_back(root);
        starts.push_back(sq);
    }
    while (static_cast<int>(starts.size()) < opts.restarts) {
        std::vector<double> s(n, 0.0);
        for (double& v : s) v = rng.normal();
        starts.push_back(std::move(s));
    }

    double best = 0.0;
    std::vector<double> best_x;
    for (auto& start : starts) {
        std::vector<double> x = start;
        clamp(x);
        double cur = ratio_at(o, f, x);
        for (double step = 1.0; step > 1e-6; step *= 0.5) {
            bool improved = true;
            int guard = 0;
            while (improved && guard++ < 40) {
                improved = false;
                for (std::size_t i = 0; i < n; ++i) {
                    if (aligned && f[i] == 0.0) continue;
                    const double scale = step * std::max(1.0, std::fabs(x[i]));
                    for (double dir : {+1.0, -1.0}) {
                        std::vector<double> y = x;
                        y[i] += dir * scale;
                        clamp(y);
                        const double r = ratio_at(o, f, y);
                        if (r > cur * (1.0 + 1e-12)) {
                            x = std::move(y);
                            cur = r;
                            improved = true;
                        }
                    }
                }
            }
        }
        if (cur > best) {
            best = cur;
            best_x = x;
        }
    }
    return {best, best_x};
}

// LP upper bound through a (possibly truncated) norming set: a truncation
// under-estimates the norm, so its polar over-estimates the dual norm.
double lp_upper(const NormOracle& o, const Functional& f, const DualOptions& opts) {
    const auto& d = o.descriptor();
    if (d.family != Family::Tsirelson) return std::numeric_limits<double>::infinity();
    const int window = static_cast<int>(f.length());
    if (window == 0) return 0.0;
    if (window > opts.lp_window_limit) return std::numeric_limits<double>::infinity();

    NormingFunctionalSet set;
    try {
        const int depth = opts.lp_depth > 0 ? opts.lp_depth : window;
        set = generate_norming_set(d.theta, window, depth, opts.lp_cap);
    } catch (const CapExceeded&) {
        return std::numeric_limits<double>::infinity();
    }

    // ||f||_* = max |f|.x st. g.x <= 1 for all reps g, x >= 0; solve the
    // covering dual: min 1.y st. sum_g y_g g >= |f|, y >= 0.
    const std::size_t nrows = f.length();
    const std::size_t ncols = set.reps.size();
    std::vector<std::vector<double>> a(nrows, std::vector<double>(ncols, 0.0));
    for (std::size_t g = 0; g < ncols; ++g)
        for (std::size_t i = 0; i < nrows; ++i)
            a[i][g] = set.reps[g][i];
    std::vector<double> b(nrows);
    for (std::size_t i = 0; i < nrows; ++i) b[i] = std::fabs(f[i]);
    std::vector<double> c(ncols, 1.0);

    const auto res = detail::simplex_min_ge(a, b, c);
    if (res.status != detail::SimplexResult::Status::Optimal)
        return std::numeric_limits<double>::infinity();
    return res.value;
}

} // namespace

double dual_norm_exact(const NormOracle& o, const Functional& f) {
    if (!o.has_exact_dual())
        throw std::invalid_argument("dual_norm_exact: space '" + o.name() +
                                    "' has no exact dual formula");
    const auto& d = o.descriptor();
    if (d.family == Family::C0) {
        double s = 0.0;
        for (double v : f.coeffs()) s += std::fabs(v);
        return s;
    }
    // Lp: conjugate exponent
    if (d.p == 1.0) {
        double s = 0.0;
        for (double v : f.coeffs()) s = std::max(s, std::fabs(v));
        return s;
    }
    const double q = d.p / (d.p - 1.0);
    double s = 0.0;
    for (double v : f.coeffs()) s += std::pow(std::fabs(v), q);
    return std::pow(s, 1.0 / q);
}

Bracket dual_norm_bracket(const NormOracle& o, const Functional& f,
                          const DualOptions& opts) {
    Bracket b;
    b.lower = ascent_lower(o, f, opts).first;
    b.upper = lp_upper(o, f, opts);
    if (b.upper < b.lower) b.upper = b.lower; // LP and ascent agree to fp noise
    return b;
}

std::pair<double, std::vector<double>> dual_lower_witnessed(const NormOracle& o,
                                                            const Functional& f,
                                                            const DualOptions& opts) {
    return ascent_lower(o, f, opts);
}

Bracket dual_norm(const NormOracle& o, const Functional& f, DualMethod method,
                  const DualOptions& opts) {
    if (method == DualMethod::Exact) {
        const double v = dual_norm_exact(o, f);
        return Bracket{v, v};
    }
    return dual_norm_bracket(o, f, opts);
}

} // namespace basislab
