// basislab -- command-line front end: norms, fundamental-function tables,
// multiplicativity stats and per-space verdict suites over the catalog of
// sequence spaces.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "basislab/constants.hpp"
#include "basislab/errors.hpp"
#include "basislab/harness.hpp"
#include "basislab/norms.hpp"
#include "basislab/report_io.hpp"

namespace {

using namespace basislab;

std::vector<double> parse_vector_literal(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        double v = 0.0;
        const auto* end = tok.data() + tok.size();
        auto [p, ec] = std::from_chars(tok.data(), end, v);
        if (ec != std::errc() || p != end || tok.empty())
            throw ParseError("vector literal: bad token '" + tok + "'");
        out.push_back(v);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

std::string fmt12(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) std::cout << text;
    else write_text_file(out_path, text);
}

int cmd_norm(const std::string& space_text, const std::string& vec_text) {
    const Space o = make_oracle(space_text);
    const FiniteVector x(parse_vector_literal(vec_text));
    std::cout << fmt12(o->norm(x)) << "\n";
    return 0;
}

int cmd_phi(const std::string& space_text, int window, const std::string& format,
            const std::string& out_path, Budgets budgets) {
    const SpaceDescriptor d = parse_space(space_text);
    const Space o = make_oracle(d);
    if (o->costly()) {
        budgets.dual_restarts = std::min(budgets.dual_restarts, 4);
        budgets.dual_ascent_limit = std::min(budgets.dual_ascent_limit, 8);
    }
    const FundamentalTable t = build_fundamental_table(*o, window, budgets);
    emit(format == "json" ? table_to_json(t, d) : table_to_csv(t), out_path);
    return 0;
}

int cmd_fit_p(const std::string& space_text, int window, Budgets budgets) {
    const Space o = make_oracle(space_text);
    budgets.dual_ascent_limit = 0; // the fit reads lambda only
    const FundamentalTable t = build_fundamental_table(*o, window, budgets);
    const ExponentFit fit = fit_exponent(t);
    std::cout << "p_hat " << fmt12(fit.p_hat) << "\n";
    std::cout << "r_squared " << fmt12(fit.r_squared) << "\n";
    return 0;
}

int cmd_ktest(const std::string& space_text, const std::string& sampler_text,
              int trials, std::uint64_t seed, int max_len) {
    const Space o = make_oracle(space_text);
    const Sampler sampler{parse_sampler(sampler_text)};
    const auto [up, lo] = k_ratio_stats(*o, sampler, trials, seed, max_len);
    std::cout << "K_upper_certified " << fmt12(up.certified_lower) << "\n";
    std::cout << "K_lower_certified " << fmt12(lo.certified_lower) << "\n";
    std::cout << "samples " << up.samples << "\n";
    return 0;
}

int cmd_signavg(const std::string& space_text, int window, int trials,
                std::uint64_t seed, std::uint64_t sign_cap,
                const std::string& out_path) {
    const Space o = make_oracle(space_text);
    std::string csv = "n,mean,stderr,mean_over_n\n";
    for (int n = 1; n <= window; ++n) {
        const bool exhaustive = n <= 62 && (1ull << n) <= sign_cap;
        const auto [mean, se] =
            sign_average(*o, n, exhaustive ? AverageMode::Exhaustive : AverageMode::MonteCarlo,
                         trials, seed, sign_cap);
        csv += std::to_string(n) + "," + fmt12(mean) + "," + fmt12(se) + "," +
               fmt12(mean / n) + "\n";
    }
    emit(csv, out_path);
    return 0;
}

int assert_class_matches(const std::string& hint, const std::string& wanted) {
    bool ok = false;
    if (wanted == "lp") ok = hint.rfind("consistent-with-lp", 0) == 0;
    else if (wanted == "c0") ok = hint == "consistent-with-c0";
    else if (wanted == "inconsistent") ok = hint.rfind("inconsistent", 0) == 0;
    else if (wanted == "inconclusive") ok = hint == "inconclusive";
    else throw ParseError("--assert-class: unknown class '" + wanted + "'");
    return ok ? 0 : 1;
}

int cmd_suite(const std::string& space_text, SuiteConfig cfg,
              const std::string& sampler_text, const std::string& out_path,
              const std::string& format, const std::string& assert_class) {
    cfg.sampler = parse_sampler(sampler_text);
    const SpaceDescriptor d = parse_space(space_text);
    const SuiteReport report = run_suite(d, cfg);
    write_text_file(out_path, report_to_json(report));
    if (format == "csv") {
        const std::string stem =
            out_path.size() > 5 && out_path.ends_with(".json")
                ? out_path.substr(0, out_path.size() - 5)
                : out_path;
        write_text_file(stem + "_lambda.csv", report_lambda_csv(report));
        write_text_file(stem + "_profiles.csv", report_profiles_csv(report));
    }
    std::cout << "space " << d.text() << "\n";
    std::cout << "classification_hint " << report.classification_hint << "\n";
    std::cout << "report " << out_path << "\n";
    if (!assert_class.empty())
        return assert_class_matches(report.classification_hint, assert_class);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"basislab: numeric laboratory for sequence-space bases and the "
                 "block multiplication on their spans"};
    app.require_subcommand(1);
    app.footer(
        "Space descriptors: family:key=value,...  families lp | c0 | lorentz |\n"
        "tsirelson | tp | summing; keys p (>=1), theta (in (0,1)), s (Lorentz\n"
        "weight w_i = i^-s). Vector literals: real{,real}.\n"
        "\n"
        "CSV columns:\n"
        "  phi:       n,lambda,phi,phi_mode,lambda_star_lower,lambda_star_upper,\n"
        "             phi_star_lower,phi_star_upper\n"
        "  signavg:   n,mean,stderr,mean_over_n\n"
        "  suite --format csv side tables:\n"
        "    <out>_lambda.csv:   n,lambda,phi,lambda_star_lower,lambda_star_upper,\n"
        "                        phi_star_lower,phi_star_upper\n"
        "    <out>_profiles.csv: check,profile,index,value\n"
        "\n"
        "Reports embed every default (window 32, trials 2000, subset cap 10^6,\n"
        "sign cap 2^20, seed 0) under \"budgets\"; all wall-clock data lives in\n"
        "the single top-level \"timestamp\" field.");

    std::string space_text, vec_text, out_path, assert_class;
    std::string format = "csv";
    std::string sampler_text = "gaussian";
    Budgets budgets; // defaults: window 32, trials 2000, subset cap 1e6, sign cap 2^20, seed 0
    int window = 32;
    int max_len = 8;

    auto* norm = app.add_subcommand("norm", "norm of a coefficient vector");
    norm->add_option("--space", space_text, "space descriptor, e.g. lp:p=2")->required();
    norm->add_option("--vec", vec_text, "comma-separated coefficients")->required();

    auto* phi = app.add_subcommand("phi", "lambda/phi/phi* table over a window");
    phi->add_option("--space", space_text)->required();
    phi->add_option("--N", window, "window size (default 32)")->check(CLI::PositiveNumber);
    phi->add_option("--format", format, "csv | json (default csv)");
    phi->add_option("--out", out_path, "output path (default stdout)");
    phi->add_option("--seed", budgets.seed);
    phi->add_option("--subset-cap", budgets.subset_cap);

    auto* fitp = app.add_subcommand("fit-p", "fit lambda(n) ~ n^{1/p} on dyadic n");
    fitp->add_option("--space", space_text)->required();
    fitp->add_option("--N", window, "window size (default 32)")->check(CLI::Range(4, 128));

    auto* ktest = app.add_subcommand("ktest", "multiplicativity ratio bounds");
    ktest->add_option("--space", space_text)->required();
    ktest->add_option("--trials", budgets.trials, "sampled pairs (default 2000)");
    ktest->add_option("--seed", budgets.seed);
    ktest->add_option("--sampler", sampler_text, "gaussian | rademacher_sparse:k=K | "
                                                 "geometric:r=R | indicator_random");
    ktest->add_option("--max-len", max_len, "max factor length (default 8)")->check(CLI::PositiveNumber);

    auto* signavg = app.add_subcommand("signavg", "averaged sign norms over a window");
    signavg->add_option("--space", space_text)->required();
    signavg->add_option("--N", window, "window size (default 32)")->check(CLI::Range(1, 62));
    signavg->add_option("--trials", budgets.trials);
    signavg->add_option("--seed", budgets.seed);
    signavg->add_option("--sign-cap", budgets.sign_cap, "exhaustive cutoff (default 2^20)");
    signavg->add_option("--out", out_path);

    SuiteConfig cfg;
    std::string suite_out = "suite_report.json";
    auto* suite = app.add_subcommand("suite", "full per-space verdict suite");
    suite->add_option("--space", space_text)->required();
    suite->add_option("--N", cfg.budgets.window, "lambda window (default 32)")->check(CLI::PositiveNumber);
    suite->add_option("--trials", cfg.budgets.trials, "sampled draws (default 2000)");
    suite->add_option("--seed", cfg.budgets.seed, "master seed (default 0)");
    suite->add_option("--subset-cap", cfg.budgets.subset_cap, "default 10^6");
    suite->add_option("--sign-cap", cfg.budgets.sign_cap, "default 2^20");
    suite->add_option("--sampler", sampler_text);
    suite->add_option("--threshold", cfg.inconsistency_threshold,
                      "inconsistency threshold for rule (iii), default 3");
    suite->add_option("--elton-n", cfg.elton_n, "default 8");
    suite->add_option("--elton-c", cfg.elton_c, "default 0.45");
    suite->add_option("--out", suite_out, "report path (default suite_report.json)");
    suite->add_option("--format", format, "csv also writes profile tables");
    suite->add_option("--assert-class", assert_class,
                      "exit 0 iff the hint matches: c0 | lp | inconsistent | inconclusive");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*norm) return cmd_norm(space_text, vec_text);
        if (*phi) return cmd_phi(space_text, window, format, out_path, budgets);
        if (*fitp) return cmd_fit_p(space_text, window, budgets);
        if (*ktest) return cmd_ktest(space_text, sampler_text, budgets.trials,
                                     budgets.seed, max_len);
        if (*signavg) return cmd_signavg(space_text, window, budgets.trials,
                                         budgets.seed, budgets.sign_cap, out_path);
        if (*suite) return cmd_suite(space_text, cfg, sampler_text, suite_out, format,
                                     assert_class);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
