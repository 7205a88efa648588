#pragma once

#include <stdexcept>
#include <string>

namespace neph {

// Base class for all numeric and precondition failures raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid or out-of-domain parameters (c a non-positive integer, bad ordering, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Gamma evaluated at a pole (non-positive integer).
class PoleError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

// Series cannot converge, or no rigorous remainder bound exists, for the request.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// Adaptive quadrature exhausted its budget before reaching the tolerance.
class QuadratureError : public Error {
public:
    using Error::Error;
};

// Root bracketing failed: the criterion has the same sign at both endpoints.
class BracketError : public Error {
public:
    using Error::Error;
};

// Point lies too close to a sampled boundary for a reliable in/out verdict.
class AmbiguityError : public Error {
public:
    using Error::Error;
};

// Two independent checks disagree. Reported, never resolved silently.
class DiscrepancyError : public Error {
public:
    using Error::Error;
};

} // namespace neph
