#pragma once

#include <stdexcept>
#include <string>

namespace sigmac {

/// Invalid argument or parameter regime violation.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An exact-form parameter disagrees with its floating counterpart.
struct ConsistencyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A hard cap (factorization limit, sieve cap, sum length) was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A sieve or band family ran out before the search could finish.
/// `required_limit` names the sieve limit that would let the caller retry.
struct CoverageError : std::runtime_error {
    double required_limit;
    CoverageError(const std::string& msg, double required)
        : std::runtime_error(msg), required_limit(required) {}
};

/// A construction exhausted its prime budget; `achieved` reports progress.
struct BudgetError : std::runtime_error {
    double achieved;
    BudgetError(const std::string& msg, double achieved_value)
        : std::runtime_error(msg), achieved(achieved_value) {}
};

/// A series cannot reach the requested tolerance; `required_terms` is the
/// estimated summation length that would be needed.
struct ConvergenceError : std::runtime_error {
    double required_terms;
    ConvergenceError(const std::string& msg, double required)
        : std::runtime_error(msg), required_terms(required) {}
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sigmac
