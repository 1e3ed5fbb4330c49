#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pluck/rat.hpp"

namespace pluck {

/// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad user input: malformed partitions, flags, or indices.
class InputError : public Error {
public:
    using Error::Error;
};

class InvalidPartition : public InputError {
public:
    using InputError::InputError;
};

class WeightMismatch : public InputError {
public:
    using InputError::InputError;
};

class OutOfRange : public InputError {
public:
    using InputError::InputError;
};

class BadIndex : public InputError {
public:
    using InputError::InputError;
};

/// Plücker formulas are only identified with enumerative counts for d >= |lambda|.
class BelowValidityFloor : public Error {
public:
    using Error::Error;
};

/// A guarantee of the algebra was violated. Never caused by valid input; it
/// means the implementation is wrong.
class InternalAssertion : public Error {
public:
    using Error::Error;
};

/// A Laurent polynomial in d kept negative powers after reduction.
class NonPolynomial : public InternalAssertion {
public:
    NonPolynomial(const std::string& what, std::vector<std::pair<int, Rat>> offending)
        : InternalAssertion(what), offending_(std::move(offending)) {}

    /// (exponent, coefficient) of every surviving negative-power term.
    [[nodiscard]] const std::vector<std::pair<int, Rat>>& offending() const { return offending_; }

private:
    std::vector<std::pair<int, Rat>> offending_;
};

/// d^t failed to divide the coefficient of s_nu in the shifted class B_t.
class DivisibilityViolation : public InternalAssertion {
public:
    DivisibilityViolation(const std::string& what, int t, int nu1, int nu2)
        : InternalAssertion(what), t_(t), nu1_(nu1), nu2_(nu2) {}

    [[nodiscard]] int t() const { return t_; }
    [[nodiscard]] std::pair<int, int> nu() const { return {nu1_, nu2_}; }

private:
    int t_;
    int nu1_;
    int nu2_;
};

class NonIntegralValue : public InternalAssertion {
public:
    using InternalAssertion::InternalAssertion;
};

}  // namespace pluck
