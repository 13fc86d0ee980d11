#include <doctest.h>

#include <cmath>
#include <vector>

#include "basislab/dual.hpp"
#include "basislab/errors.hpp"
#include "basislab/norms.hpp"
#include "basislab/rng.hpp"
#include "basislab/space.hpp"
#include "basislab/vector.hpp"

using namespace basislab;

namespace {

const std::vector<std::string> kCatalog = {
    "lp:p=1",  "lp:p=1.5", "lp:p=2",  "lp:p=3",          "c0",
    "summing", "lorentz:p=1,s=0.5",   "tsirelson:theta=0.5", "tp:p=2,theta=0.5"};

FiniteVector draw(Rng& rng, int max_len) {
    const int len = rng.uniform_int(1, max_len);
    std::vector<double> c(static_cast<std::size_t>(len));
    for (double& x : c) x = rng.uniform(-3.0, 3.0);
    return FiniteVector(std::move(c));
}

} // namespace

TEST_CASE("descriptor mini-language") {
    const auto lp2 = parse_space("lp:p=2");
    CHECK(lp2.family == Family::Lp);
    CHECK(lp2.p == 2.0);
    const auto tsi = parse_space("tsirelson:theta=0.5");
    CHECK(tsi.family == Family::Tsirelson);
    CHECK(tsi.theta == 0.5);
    const auto tp = parse_space("tp:p=2,theta=0.5");
    CHECK(tp.family == Family::PConvexTsirelson);
    CHECK(tp.p == 2.0);
    const auto lor = parse_space("lorentz:p=1,s=0.5");
    CHECK(lor.family == Family::Lorentz);
    CHECK(lor.s == 0.5);
    CHECK(parse_space("c0").family == Family::C0);
    CHECK(parse_space("summing").family == Family::Summing);

    CHECK_THROWS_AS(parse_space("lp:p=0.5"), ParseError);
    CHECK_THROWS_AS(parse_space("l2"), ParseError);
    CHECK_THROWS_AS(parse_space("lp:q=2"), ParseError);
    CHECK_THROWS_AS(parse_space("lp:p"), ParseError);
    CHECK_THROWS_AS(parse_space("lp:p=abc"), ParseError);
    CHECK_THROWS_AS(parse_space("tsirelson:theta=1"), ParseError);
    CHECK_THROWS_AS(parse_space("tsirelson:theta=0"), ParseError);

    for (const auto& text : kCatalog) {
        const auto d = parse_space(text);
        CHECK(parse_space(d.text()).text() == d.text());
    }
}

TEST_CASE("norm point values") {
    CHECK(make_oracle("lp:p=2")->norm(FiniteVector({3, 4})) == 5.0);
    CHECK(make_oracle("c0")->norm(FiniteVector({1, -2, 3})) == 3.0);
    CHECK(make_oracle("summing")->norm(FiniteVector({1, -1, 1})) == 1.0);
    CHECK(make_oracle("lorentz:p=1,s=0.5")->norm(FiniteVector({1, 1})) ==
          doctest::Approx(1.0 + std::pow(2.0, -0.5)).epsilon(1e-15));
    CHECK(make_oracle("lp:p=1")->norm(FiniteVector({1, -2, 3})) == 6.0);
}

TEST_CASE("norm axioms hold on sampled vectors") {
    for (const auto& text : kCatalog) {
        CAPTURE(text);
        const Space o = make_oracle(text);
        Rng rng(derive_seed(1, text));
        const int max_len = o->costly() ? 8 : 12;
        for (int t = 0; t < 10000; ++t) {
            const FiniteVector x = draw(rng, max_len);
            const FiniteVector y = draw(rng, max_len);
            const double nx = o->norm(x), ny = o->norm(y);
            // zero iff zero
            if (x.is_zero()) CHECK(nx == 0.0);
            else CHECK(nx > 0.0);
            // homogeneity
            const double c = rng.uniform(-4.0, 4.0);
            std::vector<double> cx(x.coeffs());
            for (double& v : cx) v *= c;
            CHECK(o->norm(FiniteVector(cx)) ==
                  doctest::Approx(std::fabs(c) * nx).epsilon(1e-12));
            // triangle inequality
            std::vector<double> s(std::max(x.length(), y.length()), 0.0);
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = x[i] + y[i];
            CHECK(o->norm(FiniteVector(s)) <= (nx + ny) * (1.0 + 1e-9) + 1e-12);
        }
    }
}

TEST_CASE("1-unconditionality where flagged") {
    for (const auto& text : kCatalog) {
        const Space o = make_oracle(text);
        if (!o->is_1_unconditional()) continue;
        CAPTURE(text);
        Rng rng(derive_seed(2, text));
        for (int t = 0; t < 300; ++t) {
            const FiniteVector x = draw(rng, o->costly() ? 8 : 12);
            if (x.is_zero()) continue;
            std::vector<double> flipped(x.coeffs());
            for (double& v : flipped)
                if (rng.sign() < 0) v = -v;
            CHECK(o->norm(FiniteVector(flipped)) == o->norm(x)); // sign flips exact
            std::vector<double> deleted(x.coeffs());
            deleted[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<int>(x.length()) - 1))] = 0.0;
            CHECK(o->norm(FiniteVector(deleted)) <= o->norm(x) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("summing basis is the catalog's true negative") {
    const Space o = make_oracle("summing");
    CHECK_FALSE(o->is_1_unconditional());
    // sign flip changes the norm
    CHECK(o->norm(indicator(4)) == 4.0);
    CHECK(o->norm(FiniteVector({1, -1, 1, -1})) == 1.0);
}

TEST_CASE("the basis is normalized in every catalog space") {
    for (const auto& text : kCatalog) {
        CAPTURE(text);
        const Space o = make_oracle(text);
        for (int i = 1; i <= 16; ++i) CHECK(o->norm(unit_vector(i)) == 1.0);
    }
}

TEST_CASE("exact duals") {
    const Space l2 = make_oracle("lp:p=2");
    CHECK(dual_norm_exact(*l2, Functional({3, 4})) == 5.0);
    const Space l1 = make_oracle("lp:p=1");
    CHECK(dual_norm_exact(*l1, Functional({1, -2})) == 2.0);
    const Space c0 = make_oracle("c0");
    CHECK(dual_norm_exact(*c0, Functional({1, -2, 3})) == 6.0);
    const Space l3 = make_oracle("lp:p=3");
    CHECK(dual_norm_exact(*l3, Functional({1, 1})) ==
          doctest::Approx(std::pow(2.0, 1.0 / 1.5)).epsilon(1e-15));
    CHECK_THROWS_AS(dual_norm_exact(*make_oracle("summing"), Functional({1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        dual_norm(*make_oracle("lorentz:p=1,s=0.5"), Functional({1}), DualMethod::Exact),
        std::invalid_argument);
    const Bracket viaexact = dual_norm(*l2, Functional({3, 4}), DualMethod::Exact);
    CHECK(viaexact.lower == 5.0);
    CHECK(viaexact.upper == 5.0);
}

TEST_CASE("bracket lower bounds approach the exact dual on lp") {
    Rng rng(5);
    for (const char* text : {"lp:p=1", "lp:p=1.5", "lp:p=2", "lp:p=3", "c0"}) {
        const Space o = make_oracle(text);
        CAPTURE(text);
        for (int t = 0; t < 8; ++t) {
            const FiniteVector raw = draw(rng, 6);
            if (raw.is_zero()) continue;
            const Functional f(raw.coeffs());
            const double exact = dual_norm_exact(*o, f);
            const Bracket b = dual_norm_bracket(*o, f, {});
            CHECK(b.lower >= exact - 1e-6 * std::max(1.0, exact));
            CHECK(b.lower <= exact * (1.0 + 1e-9));
            if (b.upper_is_finite()) CHECK(b.upper >= exact * (1.0 - 1e-9));
        }
    }
}

TEST_CASE("Lorentz rearrangement by hand") {
    const Space o = make_oracle("lorentz:p=1,s=0.5");
    // |x| sorted descending (3,2,1) against weights (1, 2^-1/2, 3^-1/2)
    const double expect = 3.0 + 2.0 * std::pow(2.0, -0.5) + std::pow(3.0, -0.5);
    CHECK(o->norm(FiniteVector({2, -1, 3})) == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("Tsirelson dual ascent and LP pinch on small indicators") {
    const Space o = make_oracle("tsirelson:theta=0.5");
    const double expected[6] = {1.0, 2.0, 3.0, 4.0, 4.0, 14.0 / 3.0};
    for (int n = 1; n <= 6; ++n) {
        const Bracket b = dual_norm_bracket(*o, indicator_functional(n), {});
        CHECK(b.lower == doctest::Approx(expected[n - 1]).epsilon(1e-9));
        CHECK(b.upper == doctest::Approx(expected[n - 1]).epsilon(1e-9));
    }
}

TEST_CASE("Tsirelson dual brackets") {
    const Space o = make_oracle("tsirelson:theta=0.5");
    const Bracket e1 = dual_norm_bracket(*o, unit_functional(1), {});
    CHECK(e1.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e1.upper == doctest::Approx(1.0).epsilon(1e-12));
    const Bracket b8 = dual_norm_bracket(*o, indicator_functional(8), {});
    CHECK(b8.lower <= b8.upper);
    CHECK(b8.lower >= 8.0 / 2.0 - 1e-9); // pairing against 1_8 / lambda(8)
    CHECK(b8.upper_is_finite());
    // p-convexified Tsirelson has no norming machinery: upper is the sentinel
    const Bracket tp = dual_norm_bracket(*make_oracle("tp:p=2,theta=0.5"),
                                         indicator_functional(4), {});
    CHECK_FALSE(tp.upper_is_finite());
    CHECK(tp.lower > 0.0);
}
