#include "basislab/vector.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "basislab/errors.hpp"

namespace basislab {
namespace detail {

void trim_trailing_zeros(std::vector<double>& c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
}

std::vector<double> tensor_coeffs(const std::vector<double>& a,
                                  const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), m = b.size();
    std::vector<double> r(n * m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; j < m; ++j) r[i * m + j] = a[i] * b[j];
    }
    trim_trailing_zeros(r); // a_n * b_m can underflow to zero
    return r;
}

std::vector<double> power_coeffs(const std::vector<double>& a, int n,
                                 std::size_t cap) {
    if (n < 1) throw std::invalid_argument("power: exponent must be >= 1");
    if (a.empty()) return {};
    std::vector<double> r = a;
    for (int k = 1; k < n; ++k) {
        if (r.size() > cap / a.size())
            throw CapExceeded("power: result would exceed " + std::to_string(cap) +
                              " coefficients");
        r = tensor_coeffs(r, a);
        if (r.empty()) return {};
    }
    return r;
}

namespace {

// Walks the compositions (i_1,...,i_m) of n and, per composition, every
// base-m word with that letter count (the index set A(i_1,...,i_m)).
void place_composition(const std::vector<double>& a, int n, std::size_t m,
                       std::vector<int>& comp, std::size_t pos, int left,
                       std::vector<double>& out) {
    if (pos + 1 == m) {
        comp[pos] = left;
        double value = 1.0;
        for (std::size_t k = 0; k < m; ++k)
            for (int t = 0; t < comp[k]; ++t) value *= a[k];
        // word with letter counts comp, letters 0..m-1, ascending start
        std::vector<int> word;
        word.reserve(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < m; ++k)
            word.insert(word.end(), static_cast<std::size_t>(comp[k]),
                        static_cast<int>(k));
        do {
            std::size_t idx = 0;
            for (int letter : word) idx = idx * m + static_cast<std::size_t>(letter);
            out[idx] = value;
        } while (std::next_permutation(word.begin(), word.end()));
        return;
    }
    for (int i = 0; i <= left; ++i) {
        comp[pos] = i;
        place_composition(a, n, m, comp, pos + 1, left - i, out);
    }
}

} // namespace

std::vector<double> multinomial_coeffs(const std::vector<double>& a, int n,
                                       std::size_t cap) {
    if (n < 1) throw std::invalid_argument("multinomial_power: exponent must be >= 1");
    if (a.empty())
        throw std::invalid_argument("multinomial_power: zero vector has no expansion");
    const std::size_t m = a.size();
    std::size_t total = 1;
    for (int k = 0; k < n; ++k) {
        if (total > cap / m)
            throw CapExceeded("multinomial_power: m^n exceeds " + std::to_string(cap) +
                              " coefficients");
        total *= m;
    }
    std::vector<double> out(total, 0.0);
    std::vector<int> comp(m, 0);
    place_composition(a, n, m, comp, 0, n, out);
    trim_trailing_zeros(out);
    return out;
}

} // namespace detail

FiniteVector tensor_mul(const FiniteVector& a, const FiniteVector& b) {
    return FiniteVector(detail::tensor_coeffs(a.coeffs(), b.coeffs()));
}

Functional tensor_mul(const Functional& a, const Functional& b) {
    return Functional(detail::tensor_coeffs(a.coeffs(), b.coeffs()));
}

FiniteVector power(const FiniteVector& a, int n, std::size_t cap) {
    return FiniteVector(detail::power_coeffs(a.coeffs(), n, cap));
}

Functional power(const Functional& a, int n, std::size_t cap) {
    return Functional(detail::power_coeffs(a.coeffs(), n, cap));
}

FiniteVector multinomial_power(const FiniteVector& a, int n, std::size_t cap) {
    return FiniteVector(detail::multinomial_coeffs(a.coeffs(), n, cap));
}

namespace {
std::vector<double> indicator_coeffs(int n) {
    if (n < 0) throw std::invalid_argument("indicator: n must be >= 0");
    return std::vector<double>(static_cast<std::size_t>(n), 1.0);
}

std::vector<double> indicator_set_coeffs(const std::vector<int>& a) {
    std::vector<double> c;
    for (int i : a) {
        if (i < 1) throw std::invalid_argument("indicator_of_set: indices are 1-based");
        if (static_cast<std::size_t>(i) > c.size()) c.resize(static_cast<std::size_t>(i), 0.0);
        c[static_cast<std::size_t>(i) - 1] = 1.0;
    }
    return c;
}
} // namespace

FiniteVector indicator(int n) { return FiniteVector(indicator_coeffs(n)); }

FiniteVector indicator_of_set(const std::vector<int>& a) {
    return FiniteVector(indicator_set_coeffs(a));
}

Functional indicator_functional(int n) { return Functional(indicator_coeffs(n)); }

Functional indicator_functional_of_set(const std::vector<int>& a) {
    return Functional(indicator_set_coeffs(a));
}

double pair(const Functional& f, const FiniteVector& a) {
    const std::size_t n = std::min(f.length(), a.length());
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += f[i] * a[i];
    return s;
}

FiniteVector unit_vector(int n) {
    if (n < 1) throw std::invalid_argument("unit_vector: index is 1-based");
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    c.back() = 1.0;
    return FiniteVector(std::move(c));
}

Functional unit_functional(int n) {
    if (n < 1) throw std::invalid_argument("unit_functional: index is 1-based");
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    c.back() = 1.0;
    return Functional(std::move(c));
}

} // namespace basislab
