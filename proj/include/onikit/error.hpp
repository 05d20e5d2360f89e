#pragma once

#include <stdexcept>
#include <string>

namespace onikit {

/// Base of every error thrown by the library. The CLI maps all of these to
/// exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed or inconsistent input: unknown labels, foreign sets, universe
/// mismatches, label collisions.
class InputError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "input"; }
};

/// The input is well formed but violates an operation's precondition
/// (e.g. a tree that is not balanced).
class PreconditionError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "precondition"; }
};

/// An exhaustive search would exceed a configured cap.
class ResourceError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "resource"; }
};

}  // namespace onikit
