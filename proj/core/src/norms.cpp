#include "basislab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace basislab {

namespace {

class LpNorm final : public NormOracle {
public:
    explicit LpNorm(SpaceDescriptor d) : NormOracle(d, true, true, true), p_(d.p) {}
    double norm(const FiniteVector& x) const override {
        if (p_ == 1.0) {
            double s = 0.0;
            for (double v : x.coeffs()) s += std::fabs(v);
            return s;
        }
        if (p_ == 2.0) {
            double s = 0.0;
            for (double v : x.coeffs()) s += v * v;
            return std::sqrt(s);
        }
        double s = 0.0;
        for (double v : x.coeffs()) s += std::pow(std::fabs(v), p_);
        return std::pow(s, 1.0 / p_);
    }

private:
    double p_;
};

class C0Norm final : public NormOracle {
public:
    explicit C0Norm(SpaceDescriptor d) : NormOracle(d, true, true, true) {}
    double norm(const FiniteVector& x) const override {
        double s = 0.0;
        for (double v : x.coeffs()) s = std::max(s, std::fabs(v));
        return s;
    }
};

// sup_n |sum_{i<=n} x_i|; the canonical basis that is not unconditional
// for constant coefficients.
class SummingNorm final : public NormOracle {
public:
    explicit SummingNorm(SpaceDescriptor d) : NormOracle(d, false, false, false) {}
    double norm(const FiniteVector& x) const override {
        double run = 0.0, best = 0.0;
        for (double v : x.coeffs()) {
            run += v;
            best = std::max(best, std::fabs(run));
        }
        return best;
    }
    double dual_unit_bound() const override { return 2.0; }
};

// Lorentz d(w,p) with w_i = i^-s: norm = (sum w_i (x*_i)^p)^{1/p} over the
// nonincreasing rearrangement x* of |x|.
class LorentzNorm final : public NormOracle {
public:
    explicit LorentzNorm(SpaceDescriptor d)
        : NormOracle(d, true, true, false), p_(d.p), s_(d.s) {}
    double norm(const FiniteVector& x) const override {
        std::vector<double> a(x.coeffs());
        for (double& v : a) v = std::fabs(v);
        std::sort(a.begin(), a.end(), std::greater<double>());
        double acc = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0.0) break;
            const double w = std::pow(static_cast<double>(i + 1), -s_);
            acc += w * (p_ == 1.0 ? a[i] : std::pow(a[i], p_));
        }
        return p_ == 1.0 ? acc : std::pow(acc, 1.0 / p_);
    }

private:
    double p_;
    double s_;
};

class TsirelsonOracle final : public NormOracle {
public:
    explicit TsirelsonOracle(SpaceDescriptor d)
        : NormOracle(d, true, false, false), theta_(d.theta) {}
    double norm(const FiniteVector& x) const override {
        return tsirelson_norm(x, theta_, kDefaultTsirelsonWindow);
    }
    bool costly() const override { return true; }

private:
    double theta_;
};

class PConvexTsirelsonOracle final : public NormOracle {
public:
    explicit PConvexTsirelsonOracle(SpaceDescriptor d)
        : NormOracle(d, true, false, false), p_(d.p), theta_(d.theta) {}
    double norm(const FiniteVector& x) const override {
        return pconvex_norm(x, p_, theta_, kDefaultTsirelsonWindow);
    }
    bool costly() const override { return true; }

private:
    double p_;
    double theta_;
};

} // namespace

double sequence_lp_norm(const std::vector<double>& c, double p) {
    if (p == 1.0) {
        double s = 0.0;
        for (double v : c) s += std::fabs(v);
        return s;
    }
    double s = 0.0;
    for (double v : c) s += std::pow(std::fabs(v), p);
    return std::pow(s, 1.0 / p);
}

Space make_oracle(const SpaceDescriptor& d) {
    switch (d.family) {
        case Family::Lp: return std::make_shared<LpNorm>(d);
        case Family::C0: return std::make_shared<C0Norm>(d);
        case Family::Lorentz: return std::make_shared<LorentzNorm>(d);
        case Family::Summing: return std::make_shared<SummingNorm>(d);
        case Family::Tsirelson: return std::make_shared<TsirelsonOracle>(d);
        case Family::PConvexTsirelson: return std::make_shared<PConvexTsirelsonOracle>(d);
    }
    return nullptr;
}

} // namespace basislab
