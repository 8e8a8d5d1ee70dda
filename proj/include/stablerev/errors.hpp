#ifndef STABLEREV_ERRORS_HPP
#define STABLEREV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stablerev {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document or value (bad rational string, duplicate atom, ...).
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& what) : Error(what) {}
};

/// Violation of an operation precondition (conditioning on a null event,
/// mixing events from different spaces, sparse lookup, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// An exhaustive search or elimination exceeded its configured budget.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

} // namespace stablerev

#endif
