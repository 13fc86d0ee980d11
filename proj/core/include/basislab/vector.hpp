#ifndef BASISLAB_VECTOR_HPP
#define BASISLAB_VECTOR_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace basislab {

inline constexpr std::size_t kDefaultTensorCap = 10'000'000;

namespace detail {
void trim_trailing_zeros(std::vector<double>& c);
std::vector<double> tensor_coeffs(const std::vector<double>& a,
                                  const std::vector<double>& b);
std::vector<double> power_coeffs(const std::vector<double>& a, int n,
                                 std::size_t cap);
std::vector<double> multinomial_coeffs(const std::vector<double>& a, int n,
                                       std::size_t cap);
} // namespace detail

/// A finitely supported coefficient sequence against the basis (e_i).
/// Coefficients are stored densely and trimmed: the last kept coefficient
/// is nonzero, so length() is well defined and drives the block size of
/// the tensor multiplication.
class FiniteVector {
public:
    FiniteVector() = default;
    explicit FiniteVector(std::vector<double> coeffs) : c_(std::move(coeffs)) {
        detail::trim_trailing_zeros(c_);
    }

    std::size_t length() const { return c_.size(); }
    bool is_zero() const { return c_.empty(); }

    /// 0-based access; positions past the support read as 0.
    double operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0.0; }
    const std::vector<double>& coeffs() const { return c_; }

    friend bool operator==(const FiniteVector& a, const FiniteVector& b) {
        return a.c_ == b.c_;
    }

private:
    std::vector<double> c_;
};

/// A finitely supported coefficient sequence against the biorthogonal
/// functionals (e_i^*). Same trimming convention as FiniteVector.
class Functional {
public:
    Functional() = default;
    explicit Functional(std::vector<double> coeffs) : c_(std::move(coeffs)) {
        detail::trim_trailing_zeros(c_);
    }

    std::size_t length() const { return c_.size(); }
    bool is_zero() const { return c_.empty(); }
    double operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0.0; }
    const std::vector<double>& coeffs() const { return c_; }

    friend bool operator==(const Functional& a, const Functional& b) {
        return a.c_ == b.c_;
    }

private:
    std::vector<double> c_;
};

/// The block multiplication: with n = length(a), m = length(b), the result
/// places a_i * b_j at position (i-1)m + j. Zero factors give zero.
FiniteVector tensor_mul(const FiniteVector& a, const FiniteVector& b);
Functional tensor_mul(const Functional& a, const Functional& b);

/// Left-iterated product a (x) a (x) ... (x) a, n >= 1 factors.
/// Throws std::invalid_argument for n = 0 and CapExceeded when the result
/// would exceed `cap` coefficients.
FiniteVector power(const FiniteVector& a, int n, std::size_t cap = kDefaultTensorCap);
Functional power(const Functional& a, int n, std::size_t cap = kDefaultTensorCap);

/// Builds a^n directly from its multinomial expansion: for every composition
/// (i_1,...,i_m) of n the value a_1^{i_1}...a_m^{i_m} is placed on the index
/// set of all base-m words with that letter count. Agrees with power().
FiniteVector multinomial_power(const FiniteVector& a, int n,
                               std::size_t cap = kDefaultTensorCap);

/// Indicator of {1..n} resp. of a finite index set (1-based indices).
FiniteVector indicator(int n);
FiniteVector indicator_of_set(const std::vector<int>& a);
Functional indicator_functional(int n);
Functional indicator_functional_of_set(const std::vector<int>& a);

/// Biorthogonal pairing sum f_i * a_i over the common support.
double pair(const Functional& f, const FiniteVector& a);

inline Functional as_functional(const FiniteVector& a) { return Functional(a.coeffs()); }
inline FiniteVector as_vector(const Functional& f) { return FiniteVector(f.coeffs()); }

/// e_n as a vector (1-based); unit_functional gives e_n^*.
FiniteVector unit_vector(int n);
Functional unit_functional(int n);

} // namespace basislab

#endif
