#ifndef BASISLAB_ERRORS_HPP
#define BASISLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace basislab {

/// Thrown when a computation would exceed a configured resource cap
/// (coefficient counts, subset enumeration budgets, functional-set sizes).
/// This is resource exhaustion, not a mathematical error.
class CapExceeded : public std::length_error {
public:
    explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

/// Thrown on malformed descriptor / literal text. The message names the
/// offending token.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace basislab

#endif
