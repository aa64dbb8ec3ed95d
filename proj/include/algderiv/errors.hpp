#ifndef ALGDERIV_ERRORS_HPP
#define ALGDERIV_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace algderiv {

/* Base of all domain errors. `code()` is the stable machine-readable
 * identifier that the CLI prints as its one-line failure reason. */
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class RingMismatchError : public Error {
public:
    explicit RingMismatchError(const std::string& what)
        : Error("ring-mismatch", what) {}
};

class UnknownVariableError : public Error {
public:
    explicit UnknownVariableError(const std::string& name)
        : Error("unknown-variable", "unknown variable '" + name + "'"), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Invalid argument values: zero denominators, zero elements where a
// nonzero one is required, mismatched weight tables, and the like.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain-error", what) {}
};

// Raised when an operation needs rational scalars but a formal weight
// symbol is in play (e.g. exponentials of symbolic eigenvalues).
class FormalWeightError : public Error {
public:
    explicit FormalWeightError(const std::string& what)
        : Error("formal-weight", what) {}
};

} // namespace algderiv

#endif
