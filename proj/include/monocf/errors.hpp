#pragma once

#include <stdexcept>
#include <string>

namespace monocf {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Caller handed us something malformed: wrong dimension, bad parameters,
/// unparseable input. Maps to exit code 1 in the CLI.
class UsageError : public Error {
public:
  using Error::Error;
};

/// The request is well-formed but exceeds a documented brute-force cap
/// (e.g. sensitivity for d > 20).
class CapabilityError : public Error {
public:
  using Error::Error;
};

/// An internal guarantee failed. Signals a bug, an impure evaluator, or a
/// model that is not actually monotone; never a user mistake.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

/// The model is constant, so no counterfactual exists. Maps to exit code 2.
class NoCounterfactualError : public Error {
public:
  using Error::Error;
};

}  // namespace monocf
