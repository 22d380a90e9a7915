#pragma once

#include <stdexcept>
#include <string>

namespace orthrus {

/// Argument outside the documented domain of an operation.
struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Netlist violates a structural invariant (multiple drivers, combinational cycle, ...).
struct MalformedNetlistError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Document does not match the expected schema.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Netlist references a cell type the library does not provide.
struct LibraryMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Technology parameters violate the fixed-pitch constraint.
struct ConstraintError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Local frontier neighborhood carries no usable geometry.
struct DegenerateGeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Too few samples to fit a model.
struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Training produced a non-finite loss.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operation called on an object in an unusable state.
struct InvalidStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Normalization reference value is zero.
struct InvalidNormalizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace orthrus
