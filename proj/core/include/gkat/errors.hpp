#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gkat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-alphabet input supplied by a caller.
class InputError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& msg, std::size_t pos)
        : InputError(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// Raised when table evidence contradicts the determinism of the target.
class DeterminismViolation : public Error {
public:
    using Error::Error;
};

// A configured size cap was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed; indicates a bug.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace gkat
