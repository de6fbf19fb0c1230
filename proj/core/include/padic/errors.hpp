#ifndef PADIC_ERRORS_HPP
#define PADIC_ERRORS_HPP

#include <stdexcept>

namespace padic {

/// Malformed input files / literals (CLI exit code 2).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Point outside the analytic domain, vanishing denominator, violated
/// membership precondition (CLI exit code 3).
struct MembershipError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace padic

#endif
