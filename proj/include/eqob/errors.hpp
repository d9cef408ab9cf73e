#pragma once

#include <stdexcept>
#include <string>

namespace eqob {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on user-supplied data failed (bad flag, malformed literal,
/// unsupported family/n combination).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A configured size budget (cells, subgroup order, resolution rank) was hit.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed (e.g. a coboundary composite is nonzero).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace eqob
