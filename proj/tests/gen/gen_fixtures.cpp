// Fixture generator: computes the frozen Tsirelson expectations from the
// exhaustive oracles and prints them as C++ initializers. Run manually; the
// output is pasted into fixtures_tsirelson.hpp.

#include <cmath>
#include <cstdio>
#include <numeric>
#include <vector>

#include "basislab/rng.hpp"
#include "basislab/tsirelson.hpp"
#include "basislab/vector.hpp"
#include "../oracle_tsirelson.hpp"

using namespace basislab;

namespace {

void print_array(const char* name, const std::vector<double>& v) {
    std::printf("inline constexpr double %s[%zu] = {\n", name, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::printf("    %a, // [%zu] = %.17g\n", v[i], i + 1, v[i]);
    }
    std::printf("};\n\n");
}

// the exact vector-generation recipe is replicated in the tests
std::vector<std::vector<double>> random_support8_vectors() {
    Rng rng(0x5EED01);
    std::vector<std::vector<double>> out;
    for (int t = 0; t < 50; ++t) {
        const int len = rng.uniform_int(1, 8);
        std::vector<double> c(static_cast<std::size_t>(len));
        for (double& x : c) x = rng.uniform(-2.0, 2.0);
        if (c.back() == 0.0) c.back() = 1.0;
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace

int main() {
    const double theta = 0.5;

    // lambda_T(n), n <= 12, from the set oracle
    std::vector<double> lam12;
    for (int n = 1; n <= 12; ++n) {
        std::vector<int> pos(static_cast<std::size_t>(n));
        std::iota(pos.begin(), pos.end(), 1);
        lam12.push_back(
            oracle::tsirelson_set_norm(pos, std::vector<double>(pos.size(), 1.0), theta));
    }
    print_array("kTsirelsonLambda12", lam12);

    // lambda_T(n), n <= 64, from the interval oracle
    const auto lam64 = oracle::tsirelson_interval_prefix_lambdas(64, theta);
    print_array("kTsirelsonLambda64", lam64);

    // cross-checks: set vs interval vs production DP
    int disagreements = 0;
    for (int n = 1; n <= 12; ++n) {
        const double dp = tsirelson_norm(indicator(n), theta);
        if (dp != lam12[static_cast<std::size_t>(n) - 1] ||
            dp != lam64[static_cast<std::size_t>(n) - 1]) {
            std::printf("// MISMATCH lambda(%d): set=%.17g interval=%.17g dp=%.17g\n", n,
                        lam12[static_cast<std::size_t>(n) - 1],
                        lam64[static_cast<std::size_t>(n) - 1], dp);
            ++disagreements;
        }
    }
    for (int n = 13; n <= 64; ++n) {
        const double dp = tsirelson_norm(indicator(n), theta);
        if (dp != lam64[static_cast<std::size_t>(n) - 1]) {
            std::printf("// MISMATCH lambda(%d): interval=%.17g dp=%.17g\n", n,
                        lam64[static_cast<std::size_t>(n) - 1], dp);
            ++disagreements;
        }
    }

    // 50 random vectors with support <= 8: set-oracle values
    const auto vecs = random_support8_vectors();
    std::vector<double> rnd_norms;
    for (const auto& c : vecs) {
        std::vector<int> pos(c.size());
        std::iota(pos.begin(), pos.end(), 1);
        const double a = oracle::tsirelson_set_norm(pos, c, theta);
        const double b = oracle::tsirelson_interval_norm(c, theta);
        const double dp = tsirelson_norm(FiniteVector(c), theta);
        if (a != b || a != dp) {
            std::printf("// MISMATCH random vec: set=%.17g interval=%.17g dp=%.17g\n",
                        a, b, dp);
            ++disagreements;
        }
        rnd_norms.push_back(a);
    }
    print_array("kTsirelsonRandom50", rnd_norms);

    // gapped supports: set oracle vs DP on vectors embedded at spread positions
    {
        Rng rng(0xA11CE);
        for (int t = 0; t < 40; ++t) {
            const int r = rng.uniform_int(1, 7);
            std::vector<int> pos;
            int p = 0;
            for (int i = 0; i < r; ++i) {
                p += rng.uniform_int(1, 3);
                pos.push_back(p);
            }
            std::vector<double> c(pos.size());
            for (double& x : c) x = rng.uniform(-2.0, 2.0);
            if (c.back() == 0.0) c.back() = 1.0;
            std::vector<double> dense(static_cast<std::size_t>(pos.back()), 0.0);
            for (std::size_t i = 0; i < pos.size(); ++i)
                dense[static_cast<std::size_t>(pos[i]) - 1] = c[i];
            const double a = oracle::tsirelson_set_norm(pos, c, theta);
            const double dp = tsirelson_norm(FiniteVector(dense), theta);
            if (a != dp) {
                std::printf("// MISMATCH gapped: set=%.17g dp=%.17g\n", a, dp);
                ++disagreements;
            }
        }
    }

    // Phi_T(4) over the window {1..16}: exhaustive subsets of size <= 4
    {
        double best = 0.0;
        for (int a = 1; a <= 16; ++a)
            for (int b = a; b <= 16; ++b)
                for (int c = b; c <= 16; ++c)
                    for (int d = c; d <= 16; ++d) {
                        std::vector<int> pos{a};
                        if (b > a) pos.push_back(b);
                        if (c > b) pos.push_back(c);
                        if (d > c) pos.push_back(d);
                        const double v = oracle::tsirelson_set_norm(
                            pos, std::vector<double>(pos.size(), 1.0), theta);
                        if (v > best) best = v;
                    }
        std::printf("inline constexpr double kTsirelsonPhi4Window16 = %a; // %.17g\n\n",
                    best, best);
    }

    std::printf("// disagreements: %d\n", disagreements);
    return disagreements == 0 ? 0 : 1;
}
