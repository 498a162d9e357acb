#pragma once

#include <stdexcept>
#include <string>

namespace sylv {

// Base of every error the library raises deliberately.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad caller input: maps to CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class NotCoprime : public InputError {
public:
    using InputError::InputError;
};

class NonPositive : public InputError {
public:
    using InputError::InputError;
};

// The division criterion is undefined for a = 1.
class UnsupportedPair : public InputError {
public:
    using InputError::InputError;
};

// A grid or sieve would exceed the configured cell bound. Exit code 3.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

// An exactness or consistency check inside the library failed. Exit code 4.
// `diagnostics()` holds a multi-line dump of the terms involved.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what, std::string diagnostics = {})
        : Error(what), diagnostics_(std::move(diagnostics)) {}

    const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
    std::string diagnostics_;
};

}  // namespace sylv
