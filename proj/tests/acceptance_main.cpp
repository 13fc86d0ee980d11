// Acceptance suite: every release criterion as one pass/fail line, with the
// tolerances pinned in code. Exit code 0 iff all criteria hold.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "basislab/constants.hpp"
#include "basislab/dual.hpp"
#include "basislab/harness.hpp"
#include "basislab/norms.hpp"
#include "basislab/rng.hpp"
#include "basislab/tsirelson.hpp"
#include "basislab/vector.hpp"
#include "fixtures_tsirelson.hpp"
#include "oracle_tsirelson.hpp"

using namespace basislab;

namespace {

int failures = 0;
int current = 0;

struct Criterion {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

void run_criterion(const std::string& label, double budget_seconds,
                   const std::function<void(Criterion&)>& body) {
    ++current;
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0.0 && secs > budget_seconds) {
        c.expect(false, "runtime " + std::to_string(secs) + "s over budget " +
                            std::to_string(budget_seconds) + "s");
    }
    if (!c.ok) ++failures;
    std::printf("%s [%2d] %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", current,
                label.c_str(), secs, c.ok ? "" : " -- ", c.ok ? "" : c.detail.c_str());
    std::fflush(stdout);
}

FiniteVector draw_real(Rng& rng, int max_len) {
    const int len = rng.uniform_int(1, max_len);
    std::vector<double> c(static_cast<std::size_t>(len));
    for (double& x : c) x = rng.uniform(-3.0, 3.0);
    return FiniteVector(std::move(c));
}

FiniteVector draw_int(Rng& rng, int max_len, int max_abs) {
    const int len = rng.uniform_int(1, max_len);
    std::vector<double> c(static_cast<std::size_t>(len));
    for (double& x : c) x = static_cast<double>(rng.uniform_int(-max_abs, max_abs));
    if (c.back() == 0.0) c.back() = 1.0;
    return FiniteVector(std::move(c));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main() {
    // 1. exact tensor multiplicativity on lp and c0
    run_criterion("tensor multiplicativity |a(x)b| = |a||b| on lp/c0, 1e-9", 10.0,
                  [](Criterion& c) {
        std::vector<Space> spaces;
        for (double p : {1.0, 1.5, 2.0, 3.0})
            spaces.push_back(make_oracle(SpaceDescriptor{Family::Lp, p, 0.5, 0.5}));
        spaces.push_back(make_oracle("c0"));
        for (const auto& o : spaces) {
            Rng rng(derive_seed(1, o->name()));
            auto check_pair = [&](const FiniteVector& a, const FiniteVector& b) {
                if (a.is_zero() || b.is_zero()) return;
                const double lhs = o->norm(tensor_mul(a, b));
                const double rhs = o->norm(a) * o->norm(b);
                c.expect(std::fabs(lhs - rhs) <= 1e-9 * rhs,
                         o->name() + ": deviation " + std::to_string(lhs - rhs));
            };
            for (int t = 0; t < 10000; ++t)
                check_pair(draw_real(rng, 10), draw_real(rng, 10));
            for (int m = 1; m <= 6; ++m)
                for (int n = 1; n <= 6; ++n) check_pair(indicator(m), indicator(n));
            check_pair(FiniteVector({1, -1}), indicator(6));
            check_pair(FiniteVector({1, 0.5, 0.25}), FiniteVector({1, -1, 1, -1}));
        }
    });

    // 2. semigroup laws
    run_criterion("semigroup laws: associativity + identity, coefficient-exact", 0.0,
                  [](Criterion& c) {
        std::vector<FiniteVector> small;
        small.push_back(FiniteVector{});
        for (int len = 1; len <= 3; ++len) {
            const int total = static_cast<int>(std::pow(3, len));
            for (int t = 0; t < total; ++t) {
                int v = t;
                std::vector<double> coeffs(static_cast<std::size_t>(len));
                for (int i = 0; i < len; ++i) {
                    coeffs[static_cast<std::size_t>(i)] = static_cast<double>(v % 3 - 1);
                    v /= 3;
                }
                small.emplace_back(std::move(coeffs));
            }
        }
        const FiniteVector e1 = unit_vector(1);
        for (const auto& a : small) {
            c.expect(tensor_mul(a, e1) == a, "right identity");
            c.expect(tensor_mul(e1, a) == a, "left identity");
            for (const auto& b : small)
                for (const auto& d : small)
                    c.expect(tensor_mul(tensor_mul(a, b), d) ==
                                 tensor_mul(a, tensor_mul(b, d)),
                             "associativity on small vectors");
        }
        Rng rng(2);
        for (int t = 0; t < 1000; ++t) {
            const FiniteVector a = draw_int(rng, 4, 3);
            const FiniteVector b = draw_int(rng, 4, 3);
            const FiniteVector d = draw_int(rng, 4, 3);
            c.expect(tensor_mul(tensor_mul(a, b), d) == tensor_mul(a, tensor_mul(b, d)),
                     "associativity on random triples");
            c.expect(tensor_mul(a, e1) == a && tensor_mul(e1, a) == a, "identity");
        }
    });

    // 3. multinomial expansion == iterated power
    run_criterion("multinomial expansion == iterated power, m<=3 n<=4", 0.0,
                  [](Criterion& c) {
        Rng rng(3);
        for (int t = 0; t < 100; ++t) {
            const int m = rng.uniform_int(1, 3);
            std::vector<double> coeffs(static_cast<std::size_t>(m));
            for (double& x : coeffs) x = static_cast<double>(rng.uniform_int(-3, 3));
            if (coeffs.back() == 0.0) coeffs.back() = 1.0;
            const FiniteVector a(std::move(coeffs));
            for (int n = 1; n <= 4; ++n)
                c.expect(multinomial_power(a, n) == power(a, n),
                         "multinomial/power mismatch");
        }
    });

    // 4. power condition on lp
    run_criterion("power condition (|a|^n/|a^n|)^{1/n} = 1 on lp, 1e-9", 0.0,
                  [](Criterion& c) {
        for (double p : {1.0, 1.5, 2.0, 3.0}) {
            const Space o = make_oracle(SpaceDescriptor{Family::Lp, p, 0.5, 0.5});
            Rng rng(derive_seed(4, o->name()));
            for (int t = 0; t < 100; ++t) {
                FiniteVector a = draw_real(rng, 5);
                while (a.is_zero()) a = draw_real(rng, 5);
                for (double v : power_condition_profile(*o, a, 5))
                    c.expect(std::fabs(v - 1.0) <= 1e-9, o->name() + ": power ratio");
            }
        }
    });

    // 5. Tsirelson oracle regression
    run_criterion("Tsirelson DP == frozen exhaustive oracle values, exact", 60.0,
                  [](Criterion& c) {
        for (int n = 1; n <= 12; ++n) {
            std::vector<int> pos(static_cast<std::size_t>(n));
            std::iota(pos.begin(), pos.end(), 1);
            const double fresh = oracle::tsirelson_set_norm(
                pos, std::vector<double>(pos.size(), 1.0), 0.5);
            c.expect(fresh == fixtures::kTsirelsonLambda12[n - 1],
                     "set oracle drifted from frozen lambda(" + std::to_string(n) + ")");
            c.expect(tsirelson_norm(indicator(n), 0.5) ==
                         fixtures::kTsirelsonLambda12[n - 1],
                     "DP != frozen lambda(" + std::to_string(n) + ")");
        }
        Rng rng(0x5EED01);
        for (int t = 0; t < 50; ++t) {
            const int len = rng.uniform_int(1, 8);
            std::vector<double> coeffs(static_cast<std::size_t>(len));
            for (double& x : coeffs) x = rng.uniform(-2.0, 2.0);
            if (coeffs.back() == 0.0) coeffs.back() = 1.0;
            std::vector<int> pos(coeffs.size());
            std::iota(pos.begin(), pos.end(), 1);
            const double dp = tsirelson_norm(FiniteVector(coeffs), 0.5);
            c.expect(dp == fixtures::kTsirelsonRandom50[t],
                     "DP != frozen random norm #" + std::to_string(t));
            c.expect(oracle::tsirelson_set_norm(pos, coeffs, 0.5) ==
                         fixtures::kTsirelsonRandom50[t],
                     "set oracle drifted on random vector");
        }
        for (int n = 1; n <= 64; ++n) {
            const double lam = tsirelson_norm(indicator(n), 0.5);
            c.expect(lam >= 0.5 * std::floor(n / 2.0), "lower forced bound");
            c.expect(lam <= static_cast<double>(n), "upper forced bound");
        }
        Rng rng2(55);
        for (int t = 0; t < 100; ++t) {
            const FiniteVector x = draw_real(rng2, 10);
            double sup = 0.0;
            for (double v : x.coeffs()) sup = std::max(sup, std::fabs(v));
            c.expect(tsirelson_norm(x, 0.5) >= sup, "sup-norm bound");
        }
    });

    // 6. exponent recovery
    run_criterion("fit_exponent: lp within 0.01, c0 -> infinity sentinel", 0.0,
                  [](Criterion& c) {
        Budgets b;
        for (double p : {1.0, 1.5, 2.0, 3.0}) {
            const Space o = make_oracle(SpaceDescriptor{Family::Lp, p, 0.5, 0.5});
            const auto fit = fit_exponent(build_fundamental_table(*o, 64, b));
            c.expect(std::fabs(fit.p_hat - p) <= 0.01,
                     "p_hat " + std::to_string(fit.p_hat) + " for p " + std::to_string(p));
        }
        const auto c0fit =
            fit_exponent(build_fundamental_table(*make_oracle("c0"), 64, b));
        c.expect(std::isinf(c0fit.p_hat), "c0 sentinel missing");
    });

    // 7. bidemocracy profile and the pairing bound
    run_criterion("bidemocracy: lp profile == 1 (1e-9); pairing bound everywhere", 0.0,
                  [](Criterion& c) {
        Budgets b;
        for (double p : {1.0, 1.5, 2.0, 3.0}) {
            const Space o = make_oracle(SpaceDescriptor{Family::Lp, p, 0.5, 0.5});
            for (const auto& br : bidemocracy_profile(*o, 16, b)) {
                c.expect(std::fabs(br.lower - 1.0) <= 1e-9, "lp profile lower");
                c.expect(std::fabs(br.upper - 1.0) <= 1e-9, "lp profile upper");
            }
        }
        for (const char* text : {"lp:p=1", "lp:p=2", "c0", "summing",
                                 "lorentz:p=1,s=0.5", "tsirelson:theta=0.5",
                                 "tp:p=2,theta=0.5"}) {
            const Space o = make_oracle(text);
            Budgets tb;
            tb.dual_ascent_limit = o->costly() ? 6 : 12;
            tb.dual_restarts = o->costly() ? 4 : 16;
            const FundamentalTable t = build_fundamental_table(*o, 16, tb);
            for (int n = 1; n <= 16; ++n)
                c.expect(t.phi[n - 1] * t.phi_star[n - 1].lower >=
                             static_cast<double>(n) * (1.0 - 1e-9),
                         std::string(text) + ": pairing bound at n=" + std::to_string(n));
        }
    });

    // 8. democracy / ccu / quasi-greedy certificates
    run_criterion("democracy == 1 (symmetric); ccu == 1 (1-unconditional); "
                  "summing witnesses", 0.0, [](Criterion& c) {
        Budgets b;
        for (const char* text :
             {"lp:p=1", "lp:p=1.5", "lp:p=2", "lp:p=3", "c0", "lorentz:p=1,s=0.5"}) {
            const auto rep = democracy_constant(*make_oracle(text), 12, b);
            c.expect(rep.certified_lower == 1.0,
                     std::string(text) + ": democracy " +
                         std::to_string(rep.certified_lower));
        }
        for (const char* text : {"lp:p=1", "lp:p=1.5", "lp:p=2", "lp:p=3", "c0",
                                 "lorentz:p=1,s=0.5", "tsirelson:theta=0.5",
                                 "tp:p=2,theta=0.5"}) {
            const auto rep =
                ccu_constant(*make_oracle(text), 8, AverageMode::Exhaustive, b);
            c.expect(rep.certified_lower == 1.0,
                     std::string(text) + ": ccu " + std::to_string(rep.certified_lower));
        }
        const auto summing_ccu =
            ccu_constant(*make_oracle("summing"), 4, AverageMode::Exhaustive, b);
        c.expect(summing_ccu.certified_lower >= 4.0, "summing ccu witness < 4");

        const Space so = make_oracle("summing");
        for (int k = 1; 2 * k + 1 <= 13; ++k) {
            std::vector<double> coeffs(static_cast<std::size_t>(2 * k + 1));
            for (int i = 0; i < 2 * k + 1; ++i)
                coeffs[static_cast<std::size_t>(i)] =
                    (i % 2 == 0) ? static_cast<double>(k) : -static_cast<double>(k + 1);
            const FiniteVector x(std::move(coeffs));
            const double ratio =
                so->norm(quasi_greedy_apply(x, static_cast<double>(k + 1))) / so->norm(x);
            c.expect(ratio >= static_cast<double>(k + 1),
                     "summing quasi-greedy ratio at k=" + std::to_string(k));
        }
        const auto qg = quasi_greedy_constant(*so, Sampler{SamplerSpec{}}, 500, 0, 13);
        c.expect(qg.certified_lower >= 7.0, "summing quasi-greedy report < 7");
    });

    // 9. the averaged-signs criterion
    run_criterion("sign averages: l1 slope == 1 (n<=16); l2 == n^{-1/2}; "
                  "summing(2) == 0.75", 0.0, [](Criterion& c) {
        const Space l1 = make_oracle("lp:p=1");
        const Space l2 = make_oracle("lp:p=2");
        for (int n = 1; n <= 16; ++n) {
            const auto [m1, s1] = sign_average(*l1, n, AverageMode::Exhaustive, 0, 0);
            c.expect(m1 / n == 1.0 && s1 == 0.0, "l1 slope at n=" + std::to_string(n));
            const auto [m2, s2] = sign_average(*l2, n, AverageMode::Exhaustive, 0, 0);
            c.expect(m2 == std::sqrt(static_cast<double>(n)) && s2 == 0.0,
                     "l2 average at n=" + std::to_string(n));
        }
        const auto [msum, ssum] =
            sign_average(*make_oracle("summing"), 2, AverageMode::Exhaustive, 0, 0);
        c.expect(msum == 1.5 && ssum == 0.0, "summing n=2 average");
        c.expect(msum / 2.0 == 0.75, "summing n=2 slope");
    });

    // 10. the lambda grid
    run_criterion("lambda grid: lp == 1 (1e-9); Tsirelson == frozen, exact", 0.0,
                  [](Criterion& c) {
        for (double p : {1.0, 1.5, 2.0, 3.0}) {
            const Space o = make_oracle(SpaceDescriptor{Family::Lp, p, 0.5, 0.5});
            for (double r : lambda_grid(*o, 8, 8).ratios)
                c.expect(std::fabs(r - 1.0) <= 1e-9, "lp grid entry");
        }
        const auto g = lambda_grid(*make_oracle("tsirelson:theta=0.5"), 8, 8);
        for (int m = 1; m <= 8; ++m)
            for (int n = 1; n <= 8; ++n) {
                const double expected =
                    fixtures::kTsirelsonLambda64[m * n - 1] /
                    (fixtures::kTsirelsonLambda64[m - 1] *
                     fixtures::kTsirelsonLambda64[n - 1]);
                c.expect(g.at(m, n) == expected, "Tsirelson grid (" + std::to_string(m) +
                                                     "," + std::to_string(n) + ")");
            }
    });

    // 11. the shift and difference identities
    run_criterion("shift and difference-basis identities, coefficient-exact", 0.0,
                  [](Criterion& c) {
        Rng rng(11);
        for (int t = 0; t < 100; ++t) {
            const int m = rng.uniform_int(1, 4);
            const int n = rng.uniform_int(1, 6);
            std::vector<double> coeffs(static_cast<std::size_t>(n));
            for (double& x : coeffs) x = rng.uniform(-3.0, 3.0);
            if (coeffs.back() == 0.0) coeffs.back() = 1.0;
            const FiniteVector a(coeffs);
            std::vector<double> shifted(static_cast<std::size_t>(m) * n, 0.0);
            shifted.insert(shifted.end(), coeffs.begin(), coeffs.end());
            c.expect(tensor_mul(unit_vector(m + 1), a) == FiniteVector(shifted),
                     "shift identity");
        }
        const FiniteVector diff_block(std::vector<double>{-1.0, 1.0});
        for (int t = 0; t < 100; ++t) {
            const int n = rng.uniform_int(1, 8);
            std::vector<double> coeffs(static_cast<std::size_t>(n));
            for (double& x : coeffs) x = rng.uniform(-3.0, 3.0);
            if (coeffs.back() == 0.0) coeffs.back() = 1.0;
            const FiniteVector a(coeffs);
            std::vector<double> diff(2 * coeffs.size(), 0.0);
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                diff[2 * i] = -coeffs[i];
                diff[2 * i + 1] = coeffs[i];
            }
            c.expect(tensor_mul(a, diff_block) == FiniteVector(diff),
                     "difference-basis identity");
        }
    });

    // 12. Elton search
    run_criterion("Elton search: l1 full set; c0 singleton; Tsirelson fixture", 0.0,
                  [](Criterion& c) {
        Budgets b;
        for (int n = 1; n <= 10; ++n) {
            const auto res = elton_subset_search(*make_oracle("lp:p=1"), n, 1.0, b);
            c.expect(static_cast<int>(res.subset.size()) == n,
                     "l1 full set at n=" + std::to_string(n));
        }
        const auto c0res = elton_subset_search(*make_oracle("c0"), 4, 0.9, b);
        c.expect(c0res.subset.size() == 1, "c0 subset size");
        const auto tsi =
            elton_subset_search(*make_oracle("tsirelson:theta=0.5"), 8, 0.45, b);
        c.expect(tsi.subset == std::vector<int>{4, 5, 6, 7}, "Tsirelson subset");
        c.expect(std::fabs(tsi.constant - 0.5) <= 1e-9, "Tsirelson certified constant");
        c.expect(tsi.delta1 == 0.5, "delta1");
    });

    // 13. CLI suite determinism and assertion exit codes
    run_criterion("suite determinism (byte-identical modulo timestamp) and "
                  "assert-class exits", 300.0, [](Criterion& c) {
        const std::string cli = BASISLAB_CLI_PATH;
        const auto dir =
            std::filesystem::temp_directory_path() / "basislab_acceptance";
        std::filesystem::create_directories(dir);
        auto at = [&](const char* name) { return (dir / name).string(); };
        auto shell = [](const std::string& cmd) {
            return WEXITSTATUS(std::system(cmd.c_str()));
        };
        c.expect(shell(cli + " suite --space tp:p=2,theta=0.5 --seed 7 --out " +
                       at("acc_det_a.json") + " > /dev/null") == 0,
                 "first suite run failed");
        c.expect(shell(cli + " suite --space tp:p=2,theta=0.5 --seed 7 --out " +
                       at("acc_det_b.json") + " > /dev/null") == 0,
                 "second suite run failed");
        auto a = nlohmann::ordered_json::parse(slurp(at("acc_det_a.json")));
        auto bjson = nlohmann::ordered_json::parse(slurp(at("acc_det_b.json")));
        c.expect(a.contains("timestamp"), "timestamp field missing");
        a.erase("timestamp");
        bjson.erase("timestamp");
        c.expect(a.dump() == bjson.dump(), "reports differ beyond the timestamp");
        c.expect(shell(cli + " suite --space lp:p=2 --assert-class lp --out " +
                       at("acc_lp.json") + " > /dev/null") == 0,
                 "lp:p=2 --assert-class lp must exit 0");
        c.expect(shell(cli + " suite --space c0 --assert-class lp --out " +
                       at("acc_c0.json") + " > /dev/null") == 1,
                 "c0 --assert-class lp must exit 1");
    });

    std::printf("%s: %d/%d criteria passed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                current - failures, current);
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
