#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace hspace {

// Base for all engine errors so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by a vanishing jet value, or a metric denominator hitting zero.
struct PoleError : Error {
    explicit PoleError(const std::string& what, std::array<double, 6> at = {})
        : Error(what), point(at) {}
    std::array<double, 6> point;
};

// Spec or config field failed validation; `field` names the offender.
struct ValidationError : Error {
    ValidationError(std::string field_, const std::string& what)
        : Error(what), field(std::move(field_)) {}
    std::string field;
};

// Singular / near-singular matrix or near-null eigenvalue.
struct DegeneracyError : Error {
    using Error::Error;
};

// Point sampler could not find enough admissible points.
struct SamplingError : Error {
    SamplingError(const std::string& what, std::string constraint_)
        : Error(what), tightest_constraint(std::move(constraint_)) {}
    std::string tightest_constraint;
};

// b = g*B came out asymmetric: wrong nilpotent shift orientation.
struct OrientationError : Error {
    using Error::Error;
};

}  // namespace hspace
