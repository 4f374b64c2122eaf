#pragma once

#include <stdexcept>
#include <string>

namespace foulkes {

/// Malformed or out-of-contract input (bad partition text, weight mismatch, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size or time budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation was cancelled from outside (signal, stop request).
class Interrupted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (e.g. a non-integral multiplicity).
class IntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace foulkes
