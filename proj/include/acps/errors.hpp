#pragma once

#include <stdexcept>
#include <string>

namespace acps {

/// Argument outside the mathematical domain of an operation (Gamma poles,
/// negative time offsets, non-positive step sizes, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two fractional polynomials that do not live on the same alpha-grid / center.
class MismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Vector or state dimension disagrees with the field dimension.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A requested sample time is not on the reference trajectory grid.
class MissingSampleError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Malformed model configuration text. Carries the location when known.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed configuration that violates a model invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace acps
