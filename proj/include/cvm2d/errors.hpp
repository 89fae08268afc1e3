#pragma once

#include <stdexcept>
#include <string>

namespace cvm2d {

// Structural problems with inputs: malformed pattern text, dimension rules,
// incompatible argument shapes. CLI exit code 3.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric-domain violations: h outside the physical branch, zero model
// probabilities under strict handling, negative log-factorial arguments.
// CLI exit code 4.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cvm2d
