#include "basislab/constants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "basislab/errors.hpp"
#include "basislab/rng.hpp"

namespace basislab {

std::string_view mode_token(SearchMode m) {
    return m == SearchMode::Exhaustive ? "exhaustive" : "heuristic";
}

namespace {

double binomial_estimate(int n, int k) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i) {
        c *= static_cast<double>(n - k + i) / static_cast<double>(i);
        if (c > 1e18) return 1e18;
    }
    return c;
}

std::vector<int> random_subset(Rng& rng, int window, int size) {
    std::vector<int> pool(static_cast<std::size_t>(window));
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < size; ++i) {
        const int j = rng.uniform_int(i, window - 1);
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + size);
    std::sort(out.begin(), out.end());
    return out;
}

// max lambda(A) over |A| = k, A subset of {1..window}, by plain combination walk
double exhaustive_best_of_size(const NormOracle& o, int window, int k,
                               std::vector<int>* arg = nullptr) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 1);
    double best = 0.0;
    for (;;) {
        const double v = lambda_of_set(o, idx);
        if (v > best) {
            best = v;
            if (arg) *arg = idx;
        }
        int t = k - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == window - (k - 1 - t)) --t;
        if (t < 0) break;
        ++idx[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < k; ++u)
            idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
    }
    return best;
}

struct HeuristicCandidates {
    std::vector<double> best_of_size; // index k-1
    std::vector<std::vector<int>> arg_of_size;
};

HeuristicCandidates heuristic_best_of_sizes(const NormOracle& o, int window,
                                            const Budgets& budgets) {
    HeuristicCandidates h;
    h.best_of_size.assign(static_cast<std::size_t>(window), 0.0);
    h.arg_of_size.assign(static_cast<std::size_t>(window), {});
    auto offer = [&](const std::vector<int>& a) {
        if (a.empty()) return;
        const double v = lambda_of_set(o, a);
        auto& slot = h.best_of_size[a.size() - 1];
        if (v > slot) {
            slot = v;
            h.arg_of_size[a.size() - 1] = a;
        }
    };
    for (int k = 1; k <= window; ++k) {
        std::vector<int> left(static_cast<std::size_t>(k));
        std::iota(left.begin(), left.end(), 1);
        offer(left);
        std::vector<int> right(static_cast<std::size_t>(k));
        std::iota(right.begin(), right.end(), window - k + 1);
        offer(right);
    }
    // greedy augmentation: one nested chain serves every size
    std::vector<int> chain;
    std::vector<char> used(static_cast<std::size_t>(window) + 1, 0);
    for (int k = 1; k <= window; ++k) {
        int best_i = 0;
        double best_v = -1.0;
        for (int i = 1; i <= window; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            std::vector<int> trial = chain;
            trial.push_back(i);
            std::sort(trial.begin(), trial.end());
            const double v = lambda_of_set(o, trial);
            if (v > best_v) {
                best_v = v;
                best_i = i;
            }
        }
        used[static_cast<std::size_t>(best_i)] = 1;
        chain.push_back(best_i);
        std::sort(chain.begin(), chain.end());
        offer(chain);
    }
    Rng rng(derive_seed(budgets.seed, "phi_heuristic"));
    const int draws = std::min(budgets.trials, 400);
    for (int t = 0; t < draws; ++t) {
        const int k = rng.uniform_int(1, window);
        offer(random_subset(rng, window, k));
    }
    return h;
}

} // namespace

double lambda_of_set(const NormOracle& o, const std::vector<int>& a) {
    return o.norm(indicator_of_set(a));
}

std::pair<double, SearchMode> fundamental_function(const NormOracle& o, int n,
                                                   int window, SearchMode mode,
                                                   const Budgets& budgets) {
    if (n < 1 || n > window)
        throw std::invalid_argument("fundamental_function: need 1 <= n <= window");
    if (mode == SearchMode::Exhaustive) {
        // |A| = n suffices under 1-unconditionality (superset monotonicity);
        // otherwise every size up to n is walked
        const bool prune = o.is_1_unconditional();
        double budget = 0.0;
        for (int k = prune ? n : 1; k <= n; ++k) budget += binomial_estimate(window, k);
        if (budget > static_cast<double>(budgets.subset_cap))
            throw CapExceeded("fundamental_function: subset budget exceeded");
        double best = 0.0;
        for (int k = prune ? n : 1; k <= n; ++k)
            best = std::max(best, exhaustive_best_of_size(o, window, k));
        return {best, SearchMode::Exhaustive};
    }
    const auto h = heuristic_best_of_sizes(o, window, budgets);
    double best = 0.0;
    for (int k = 1; k <= n; ++k) best = std::max(best, h.best_of_size[static_cast<std::size_t>(k) - 1]);
    return {best, SearchMode::Heuristic};
}

Bracket dual_fundamental_function(const NormOracle& o, int n, const Budgets& budgets) {
    if (n < 1) throw std::invalid_argument("dual_fundamental_function: n >= 1");
    if (o.has_exact_dual()) {
        const auto& d = o.descriptor();
        double v = 0.0;
        if (d.family == Family::C0) v = static_cast<double>(n);
        else if (d.p == 1.0) v = 1.0;
        else v = std::pow(static_cast<double>(n), (d.p - 1.0) / d.p);
        return Bracket{v, v};
    }
    const double lam = o.norm(indicator(n));
    double lower = lam > 0.0 ? static_cast<double>(n) / lam : 0.0;
    if (n <= budgets.dual_ascent_limit) {
        DualOptions opts;
        opts.restarts = budgets.dual_restarts;
        opts.seed = derive_seed(budgets.seed, "dual_fundamental");
        const Bracket b = dual_norm_bracket(o, indicator_functional(n), opts);
        lower = std::max(lower, b.lower);
    }
    const double upper = static_cast<double>(n) * o.dual_unit_bound();
    return Bracket{lower, std::max(upper, lower)};
}

FundamentalTable build_fundamental_table(const NormOracle& o, int window,
                                         const Budgets& budgets) {
    FundamentalTable t;
    t.window = window;
    t.lambda.resize(static_cast<std::size_t>(window));
    for (int n = 1; n <= window; ++n)
        t.lambda[static_cast<std::size_t>(n) - 1] = o.norm(indicator(n));

    t.phi.resize(static_cast<std::size_t>(window));
    t.phi_mode.resize(static_cast<std::size_t>(window));
    if (o.is_symmetric()) {
        // lambda(A) depends on |A| only; the sup over all of N is attained
        double run = 0.0;
        for (int n = 1; n <= window; ++n) {
            run = std::max(run, t.lambda[static_cast<std::size_t>(n) - 1]);
            t.phi[static_cast<std::size_t>(n) - 1] = run;
            t.phi_mode[static_cast<std::size_t>(n) - 1] = SearchMode::Exhaustive;
        }
    } else {
        HeuristicCandidates heur;
        bool have_heur = false;
        std::vector<double> best(static_cast<std::size_t>(window), 0.0);
        std::vector<SearchMode> mode(static_cast<std::size_t>(window),
                                     SearchMode::Heuristic);
        for (int k = 1; k <= window; ++k) {
            const bool fits =
                binomial_estimate(window, k) <= static_cast<double>(budgets.subset_cap);
            if (fits && !o.costly()) {
                best[static_cast<std::size_t>(k) - 1] =
                    exhaustive_best_of_size(o, window, k);
                mode[static_cast<std::size_t>(k) - 1] = SearchMode::Exhaustive;
            } else {
                if (!have_heur) {
                    heur = heuristic_best_of_sizes(o, window, budgets);
                    have_heur = true;
                }
                best[static_cast<std::size_t>(k) - 1] =
                    heur.best_of_size[static_cast<std::size_t>(k) - 1];
            }
        }
        double run = 0.0;
        SearchMode run_mode = SearchMode::Exhaustive;
        for (int n = 1; n <= window; ++n) {
            run = std::max(run, best[static_cast<std::size_t>(n) - 1]);
            if (mode[static_cast<std::size_t>(n) - 1] == SearchMode::Heuristic)
                run_mode = SearchMode::Heuristic;
            t.phi[static_cast<std::size_t>(n) - 1] = run;
            t.phi_mode[static_cast<std::size_t>(n) - 1] = run_mode;
        }
    }

    t.lambda_star.resize(static_cast<std::size_t>(window));
    t.phi_star.resize(static_cast<std::size_t>(window));
    double star_run = 0.0;
    for (int n = 1; n <= window; ++n) {
        Bracket b;
        if (o.has_exact_dual()) {
            b = dual_fundamental_function(o, n, budgets);
            t.lambda_star[static_cast<std::size_t>(n) - 1] = b;
            t.phi_star[static_cast<std::size_t>(n) - 1] = b;
            continue;
        }
        const double lam = t.lambda[static_cast<std::size_t>(n) - 1];
        b.lower = lam > 0.0 ? static_cast<double>(n) / lam : 0.0;
        if (n <= budgets.dual_ascent_limit) {
            DualOptions opts;
            opts.restarts = budgets.dual_restarts;
            opts.seed = derive_seed(budgets.seed, "lambda_star");
            const Bracket asc = dual_norm_bracket(o, indicator_functional(n), opts);
            b.lower = std::max(b.lower, asc.lower);
            b.upper = asc.upper;
        }
        const double univ = static_cast<double>(n) * o.dual_unit_bound();
        b.upper = std::min(b.upper, univ);
        b.upper = std::max(b.upper, b.lower);
        t.lambda_star[static_cast<std::size_t>(n) - 1] = b;
        star_run = std::max(star_run, b.lower);
        // Phi* sups over every set of size <= n; only the universal bound
        // certifies the upper end
        t.phi_star[static_cast<std::size_t>(n) - 1] =
            Bracket{star_run, std::max(univ, star_run)};
    }
    return t;
}

ConstantReport democracy_constant(const NormOracle& o, int window,
                                  const Budgets& budgets) {
    ConstantReport rep;
    rep.name = "Delta";
    rep.seed = budgets.seed;
    const std::uint64_t total = window < 63 ? (1ull << window) - 1 : ~0ull;
    if (window <= 24 && total <= budgets.subset_cap) {
        std::vector<double> lam(static_cast<std::size_t>(total) + 1, 0.0);
        std::vector<std::uint64_t> best_mask(static_cast<std::size_t>(window) + 1, 0);
        std::vector<double> phi(static_cast<std::size_t>(window) + 1, 0.0);
        for (std::uint64_t mask = 1; mask <= total; ++mask) {
            std::vector<int> a;
            for (int i = 0; i < window; ++i)
                if (mask & (1ull << i)) a.push_back(i + 1);
            lam[mask] = lambda_of_set(o, a);
            const int k = std::popcount(mask);
            if (lam[mask] > phi[static_cast<std::size_t>(k)]) {
                phi[static_cast<std::size_t>(k)] = lam[mask];
                best_mask[static_cast<std::size_t>(k)] = mask;
            }
        }
        for (int k = 2; k <= window; ++k)
            if (phi[static_cast<std::size_t>(k - 1)] > phi[static_cast<std::size_t>(k)]) {
                phi[static_cast<std::size_t>(k)] = phi[static_cast<std::size_t>(k - 1)];
                best_mask[static_cast<std::size_t>(k)] =
                    best_mask[static_cast<std::size_t>(k - 1)];
            }
        double best_ratio = 0.0;
        std::uint64_t best_a = 0;
        for (std::uint64_t mask = 1; mask <= total; ++mask) {
            const int k = std::popcount(mask);
            const double r = phi[static_cast<std::size_t>(k)] / lam[mask];
            if (r > best_ratio) {
                best_ratio = r;
                best_a = mask;
            }
        }
        auto to_coeffs = [&](std::uint64_t mask) {
            std::vector<double> c;
            for (int i = window - 1; i >= 0; --i)
                if (mask & (1ull << i)) {
                    c.assign(static_cast<std::size_t>(i) + 1, 0.0);
                    break;
                }
            for (int i = 0; i < window; ++i)
                if (mask & (1ull << i)) c[static_cast<std::size_t>(i)] = 1.0;
            return c;
        };
        Witness w;
        w.kind = "norm_ratio";
        w.vectors = {to_coeffs(best_mask[static_cast<std::size_t>(std::popcount(best_a))]),
                     to_coeffs(best_a)};
        w.ratio = best_ratio;
        rep.witnesses.push_back(std::move(w));
        rep.certified_lower = best_ratio;
        rep.estimate = best_ratio;
        rep.samples = static_cast<long>(total);
        return rep;
    }

    // sampled fallback over heuristic candidates
    const auto h = heuristic_best_of_sizes(o, window, budgets);
    std::vector<double> phi(static_cast<std::size_t>(window) + 1, 0.0);
    for (int k = 1; k <= window; ++k)
        phi[static_cast<std::size_t>(k)] =
            std::max(phi[static_cast<std::size_t>(k) - 1],
                     h.best_of_size[static_cast<std::size_t>(k) - 1]);
    Rng rng(derive_seed(budgets.seed, "democracy_sampled"));
    double best_ratio = 0.0;
    std::vector<int> best_set;
    auto consider = [&](const std::vector<int>& a) {
        if (a.empty()) return;
        const double r = phi[a.size()] / lambda_of_set(o, a);
        if (r > best_ratio) {
            best_ratio = r;
            best_set = a;
        }
    };
    for (int k = 1; k <= window; ++k) {
        std::vector<int> left(static_cast<std::size_t>(k));
        std::iota(left.begin(), left.end(), 1);
        consider(left);
        std::vector<int> right(static_cast<std::size_t>(k));
        std::iota(right.begin(), right.end(), window - k + 1);
        consider(right);
    }
    for (int tcount = 0; tcount < budgets.trials; ++tcount)
        consider(random_subset(rng, window, rng.uniform_int(1, window)));
    Witness w;
    w.kind = "norm_ratio";
    const std::size_t k = best_set.size();
    const auto& phiarg = h.arg_of_size[k - 1];
    w.vectors = {indicator_of_set(phiarg.empty() ? best_set : phiarg).coeffs(),
                 indicator_of_set(best_set).coeffs()};
    w.ratio = lambda_of_set(o, phiarg.empty() ? best_set : phiarg) /
              lambda_of_set(o, best_set);
    rep.certified_lower = w.ratio; // replayable, possibly below the scanned max
    rep.estimate = std::max(best_ratio, w.ratio);
    rep.witnesses.push_back(std::move(w));
    rep.samples = budgets.trials;
    return rep;
}

ConstantReport ccu_constant(const NormOracle& o, int n, AverageMode mode,
                            const Budgets& budgets) {
    if (n < 1 || n > 62) throw std::invalid_argument("ccu_constant: need 1 <= n <= 62");
    ConstantReport rep;
    rep.name = "C_ccu";
    rep.seed = budgets.seed;
    const double lam = o.norm(indicator(n));
    double best_ratio = 0.0;
    std::vector<double> best_vec;
    auto consider = [&](const std::vector<double>& sv) {
        const double r = o.norm(FiniteVector(sv));
        const double ratio = std::max(r / lam, lam / r);
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best_vec = sv;
        }
    };
    if (mode == AverageMode::Exhaustive) {
        const std::uint64_t count = 1ull << n;
        if (count > budgets.sign_cap)
            throw CapExceeded("ccu_constant: sign budget exceeded");
        std::vector<double> sv(static_cast<std::size_t>(n));
        for (std::uint64_t mask = 0; mask < count; ++mask) {
            for (int i = 0; i < n; ++i)
                sv[static_cast<std::size_t>(i)] = (mask & (1ull << i)) ? -1.0 : 1.0;
            consider(sv);
        }
        rep.samples = static_cast<long>(count);
    } else {
        Rng rng(derive_seed(budgets.seed, "ccu_mc"));
        std::vector<double> sv(static_cast<std::size_t>(n));
        for (int t = 0; t < budgets.trials; ++t) {
            for (double& v : sv) v = static_cast<double>(rng.sign());
            consider(sv);
        }
        rep.samples = budgets.trials;
    }
    Witness w;
    w.kind = "norm_ratio";
    const double r = o.norm(FiniteVector(best_vec));
    if (r / lam >= lam / r) w.vectors = {best_vec, indicator(n).coeffs()};
    else w.vectors = {indicator(n).coeffs(), best_vec};
    w.ratio = best_ratio;
    rep.witnesses.push_back(std::move(w));
    rep.certified_lower = best_ratio;
    rep.estimate = best_ratio;
    return rep;
}

std::pair<double, double> sign_average(const NormOracle& o, int n, AverageMode mode,
                                       int trials, std::uint64_t seed,
                                       std::uint64_t sign_cap) {
    if (n < 1 || n > 62) throw std::invalid_argument("sign_average: need 1 <= n <= 62");
    if (mode == AverageMode::Exhaustive) {
        const std::uint64_t count = 1ull << n;
        if (count > sign_cap)
            throw CapExceeded("sign_average: sign budget exceeded");
        double sum = 0.0, comp = 0.0; // Kahan
        std::vector<double> sv(static_cast<std::size_t>(n));
        for (std::uint64_t mask = 0; mask < count; ++mask) {
            for (int i = 0; i < n; ++i)
                sv[static_cast<std::size_t>(i)] = (mask & (1ull << i)) ? -1.0 : 1.0;
            const double y = o.norm(FiniteVector(sv)) - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        return {sum / static_cast<double>(count), 0.0};
    }
    Rng rng(derive_seed(seed, "sign_average_mc"));
    double mean = 0.0, m2 = 0.0;
    std::vector<double> sv(static_cast<std::size_t>(n));
    for (int t = 1; t <= trials; ++t) {
        for (double& v : sv) v = static_cast<double>(rng.sign());
        const double x = o.norm(FiniteVector(sv));
        const double d = x - mean;
        mean += d / static_cast<double>(t);
        m2 += d * (x - mean);
    }
    const double var = trials > 1 ? m2 / static_cast<double>(trials - 1) : 0.0;
    return {mean, std::sqrt(var / static_cast<double>(trials))};
}

std::vector<Bracket> bidemocracy_profile(const NormOracle& o, int window,
                                         const Budgets& budgets) {
    const FundamentalTable t = build_fundamental_table(o, window, budgets);
    std::vector<Bracket> out(static_cast<std::size_t>(window));
    for (int n = 1; n <= window; ++n) {
        const double phi_lb = t.phi[static_cast<std::size_t>(n) - 1];
        const double phi_ub =
            o.is_symmetric() ? phi_lb : static_cast<double>(n); // ||e_i|| = 1
        const Bracket& star = t.phi_star[static_cast<std::size_t>(n) - 1];
        Bracket b;
        b.lower = std::max(1.0, phi_lb * star.lower / static_cast<double>(n));
        b.upper = phi_ub * star.upper / static_cast<double>(n);
        b.upper = std::max(b.upper, b.lower);
        out[static_cast<std::size_t>(n) - 1] = b;
    }
    return out;
}

FiniteVector quasi_greedy_apply(const FiniteVector& x, double delta) {
    if (delta <= 0.0)
        throw std::invalid_argument("quasi_greedy_apply: delta must be > 0");
    std::vector<double> c(x.coeffs());
    for (double& v : c)
        if (std::fabs(v) < delta) v = 0.0;
    return FiniteVector(std::move(c));
}

ConstantReport quasi_greedy_constant(const NormOracle& o, const Sampler& sampler,
                                     int trials, std::uint64_t seed, int max_len) {
    ConstantReport rep;
    rep.name = "A_qg";
    rep.seed = seed;
    double best = 0.0;
    Witness best_w;
    auto consider = [&](const FiniteVector& x) {
        if (x.is_zero()) return;
        const double nx = o.norm(x);
        if (nx <= 0.0) return;
        std::vector<double> thresholds;
        for (double v : x.coeffs())
            if (v != 0.0) thresholds.push_back(std::fabs(v));
        std::sort(thresholds.begin(), thresholds.end());
        thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                         thresholds.end());
        for (double delta : thresholds) {
            const double r = o.norm(quasi_greedy_apply(x, delta)) / nx;
            if (r > best) {
                best = r;
                best_w.kind = "qg_ratio";
                best_w.params = {{"delta", delta}};
                best_w.vectors = {x.coeffs()};
                best_w.ratio = r;
            }
        }
    };

    // structured probes: integer alternating vectors whose thresholding
    // keeps one sign block (the partial-sum extremals), plus indicators
    // and two-scale geometric profiles
    for (int k = 1; 2 * k + 1 <= max_len; ++k) {
        std::vector<double> c(static_cast<std::size_t>(2 * k + 1));
        for (int i = 0; i < 2 * k + 1; ++i)
            c[static_cast<std::size_t>(i)] =
                (i % 2 == 0) ? static_cast<double>(k) : -static_cast<double>(k + 1);
        consider(FiniteVector(std::move(c)));
    }
    for (int n = 1; n <= max_len; ++n) consider(indicator(n));
    for (double r : {0.5, 0.9}) {
        std::vector<double> c(static_cast<std::size_t>(max_len));
        double mag = 1.0;
        for (int i = 0; i < max_len; ++i) {
            c[static_cast<std::size_t>(i)] = (i % 2 ? -mag : mag);
            mag *= r;
        }
        consider(FiniteVector(std::move(c)));
    }

    Rng rng(derive_seed(seed, "quasi_greedy"));
    for (int t = 0; t < trials; ++t) consider(sampler.draw_nonzero(rng, max_len));

    rep.certified_lower = best;
    rep.estimate = best;
    rep.samples = trials;
    if (!best_w.vectors.empty()) rep.witnesses.push_back(std::move(best_w));
    return rep;
}

double replay_witness(const NormOracle& o, const Witness& w) {
    auto vec = [&](std::size_t i) { return FiniteVector(w.vectors.at(i)); };
    if (w.kind == "norm_ratio") return o.norm(vec(0)) / o.norm(vec(1));
    if (w.kind == "tensor_upper") {
        const FiniteVector a = vec(0), b = vec(1);
        return o.norm(tensor_mul(a, b)) / (o.norm(a) * o.norm(b));
    }
    if (w.kind == "tensor_lower") {
        const FiniteVector a = vec(0), b = vec(1);
        return o.norm(a) * o.norm(b) / o.norm(tensor_mul(a, b));
    }
    if (w.kind == "power_ratio") {
        const int n = static_cast<int>(w.params.at("n"));
        const FiniteVector a = vec(0);
        return std::pow(std::pow(o.norm(a), n) / o.norm(power(a, n)),
                        1.0 / static_cast<double>(n));
    }
    if (w.kind == "lp_ratio") {
        return o.norm(vec(0)) / sequence_lp_norm(w.vectors.at(0), w.params.at("p"));
    }
    if (w.kind == "qg_ratio") {
        const FiniteVector x = vec(0);
        return o.norm(quasi_greedy_apply(x, w.params.at("delta"))) / o.norm(x);
    }
    if (w.kind == "dual_pair_ratio") {
        const Functional f(w.vectors.at(0));
        const FiniteVector x = vec(1);
        return std::fabs(pair(f, x)) / o.norm(x);
    }
    if (w.kind == "dual_pair_q_ratio") {
        const Functional f(w.vectors.at(0));
        const FiniteVector x = vec(1);
        return std::fabs(pair(f, x)) / o.norm(x) /
               sequence_lp_norm(w.vectors.at(0), w.params.at("q"));
    }
    if (w.kind == "dual_exact_q_ratio") {
        return dual_norm_exact(o, Functional(w.vectors.at(0))) /
               sequence_lp_norm(w.vectors.at(0), w.params.at("q"));
    }
    if (w.kind == "elton_min") {
        return o.norm(vec(0)) / sequence_lp_norm(w.vectors.at(0), 1.0);
    }
    throw std::invalid_argument("replay_witness: unknown kind '" + w.kind + "'");
}

} // namespace basislab
