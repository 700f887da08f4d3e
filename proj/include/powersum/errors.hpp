#ifndef POWERSUM_ERRORS_HPP
#define POWERSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace powersum {

/// Input rejected by a precondition or validation rule (bad system, 0^0, ...).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured resource cap (factorization degree, coefficient budget) was hit.
/// Raised instead of returning a possibly wrong answer.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

class FactorizationInfeasible : public ResourceCapError {
public:
    explicit FactorizationInfeasible(const std::string& what) : ResourceCapError(what) {}
};

} // namespace powersum

#endif
