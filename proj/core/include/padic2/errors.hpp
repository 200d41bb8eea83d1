#ifndef PADIC2_ERRORS_HPP
#define PADIC2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace padic2 {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when tracked absolute precision cannot support an operation:
// precision underflow on division, exhausted descent budgets, or a value
// whose stored precision cannot decide a comparison.
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& what) : Error(what) {}
};

// Argument outside an operation's domain (non-unit input, bad congruence
// class, empty input, out-of-range index, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

struct NotUnitError : DomainError {
    explicit NotUnitError(const std::string& what) : DomainError(what) {}
};

struct NoSquareRootError : DomainError {
    explicit NoSquareRootError(const std::string& what) : DomainError(what) {}
};

// Constant-to-ell pairing failures in the trace formula table.
struct PairingError : Error {
    explicit PairingError(const std::string& what) : Error(what) {}
};

// A result that must be an exact integer came out fractional.
struct IntegralityError : Error {
    explicit IntegralityError(const std::string& what) : Error(what) {}
};

}  // namespace padic2

#endif
