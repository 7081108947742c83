#pragma once

#include <stdexcept>

namespace pfw {

/// Base class for domain errors raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The (alphabet size, exponent bound) pair lies outside the parameter region
/// the construction supports (see in_upsilon).
class unsupported_parameters : public error {
public:
    using error::error;
};

/// A probe or scan exhausted its configured window or budget without reaching
/// a definite answer.  Callers must treat this as "unknown", never as a
/// verdict.
class undecided_error : public error {
public:
    using error::error;
};

/// An enumeration or search exceeded an explicit resource cap.
class resource_limit_error : public error {
public:
    using error::error;
};

/// A construction required an extendable input word but the input is not
/// extendable on the required side.
class not_extendable_error : public error {
public:
    using error::error;
};

}  // namespace pfw
