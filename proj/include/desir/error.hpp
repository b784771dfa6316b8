#pragma once

#include <stdexcept>
#include <string>

namespace desir {

/// Malformed input: bad rational strings, row-length mismatches, unknown names.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two gambles (or a gamble and a set) live on spaces of different size.
class DimensionError : public InputError {
public:
    using InputError::InputError;
};

/// A sequence product exceeded the configured cap.
class CapExceeded : public InputError {
public:
    using InputError::InputError;
};

/// An operation that requires a consistent assessment received one with the
/// empty set in its natural extension.
class InconsistentAssessment : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace desir
