#pragma once

#include <stdexcept>

namespace ldb {

/// Dimensions or array lengths do not fit together.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Slot pairs handed to place_product do not share exactly one slot.
class PlacementError : public ShapeError {
public:
    using ShapeError::ShapeError;
};

/// A documented precondition of an operation does not hold.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed textual input (scalars, structure files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ldb
