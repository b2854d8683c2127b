#ifndef ACBM_ERRORS_HPP
#define ACBM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acbm {

// Raised when a bilinear form that must be invertible turns out degenerate.
struct SingularMetricError : std::runtime_error {
    explicit SingularMetricError(const std::string& what) : std::runtime_error(what) {}
};

// Incompatible shapes fed to an operation (tensor orders, vector lengths, ...).
struct DimensionMismatchError : std::invalid_argument {
    explicit DimensionMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// Syntactic failure while reading a manifold description. Remembers the line.
struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_no(line) {}
    std::size_t line_no;
};

// Well-formed input that breaks a semantic requirement (even dimension,
// asymmetric metric, out-of-range index, duplicate bracket entry, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// The requested analysis has an unmet hypothesis (e.g. a vanishing Ricci
// tensor where a nonzero one is required). Not a bug, a refusal.
struct NotApplicableError : std::runtime_error {
    explicit NotApplicableError(const std::string& what) : std::runtime_error(what) {}
};

// Parameter point where a closed formula loses meaning (zero denominator).
struct DegenerateCaseError : std::runtime_error {
    explicit DegenerateCaseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace acbm

#endif
