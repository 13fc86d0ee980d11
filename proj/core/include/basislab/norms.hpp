#ifndef BASISLAB_NORMS_HPP
#define BASISLAB_NORMS_HPP

#include <memory>
#include <string>

#include "basislab/space.hpp"
#include "basislab/tsirelson.hpp"
#include "basislab/vector.hpp"

namespace basislab {

/// Evaluation contract for one sequence-space norm. Oracles are immutable
/// after construction and safe for concurrent evaluation.
class NormOracle {
public:
    virtual ~NormOracle() = default;

    virtual double norm(const FiniteVector& x) const = 0;
    const SpaceDescriptor& descriptor() const { return desc_; }
    std::string name() const { return desc_.text(); }

    bool is_1_unconditional() const { return unconditional_; }
    bool is_symmetric() const { return symmetric_; }
    bool has_exact_dual() const { return exact_dual_; }

    /// Exact ||e_i^*||_* upper bound, used for crude dual brackets.
    virtual double dual_unit_bound() const { return 1.0; }

    /// Recursive norms (Tsirelson families) are much costlier per call;
    /// budget-sensitive callers shrink windows and trial counts for them.
    virtual bool costly() const { return false; }

protected:
    NormOracle(SpaceDescriptor d, bool unconditional, bool symmetric, bool exact_dual)
        : desc_(d), unconditional_(unconditional), symmetric_(symmetric),
          exact_dual_(exact_dual) {}

private:
    SpaceDescriptor desc_;
    bool unconditional_;
    bool symmetric_;
    bool exact_dual_;
};

using Space = std::shared_ptr<const NormOracle>;

/// Builds the oracle for a validated descriptor.
Space make_oracle(const SpaceDescriptor& d);
inline Space make_oracle(std::string_view text) { return make_oracle(parse_space(text)); }

/// (sum |c_i|^p)^{1/p} of a raw coefficient array.
double sequence_lp_norm(const std::vector<double>& c, double p);

} // namespace basislab

#endif
