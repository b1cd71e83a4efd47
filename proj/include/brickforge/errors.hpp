#pragma once

#include <stdexcept>
#include <string>

namespace brickforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cell coordinate outside the space, or a shape that would cross a boundary.
struct BoundsError : Error {
    using Error::Error;
};

// Non-positive dimension passed to a space constructor.
struct DimensionError : Error {
    using Error::Error;
};

// Two spaces whose dimensions were expected to match but do not.
struct ShapeError : Error {
    using Error::Error;
};

// Bounding box with lo > hi in some component.
struct EmptyBoxError : Error {
    using Error::Error;
};

// EMPTY passed where a physical brick is required.
struct InvalidBrickError : Error {
    using Error::Error;
};

// Generator parameter outside its documented domain (e.g. a Sierpinski
// size that is not 2^m + 1).
struct ParameterError : Error {
    using Error::Error;
};

// Division or modulus by zero during expression evaluation.
struct ArithmeticError : Error {
    using Error::Error;
};

} // namespace brickforge
