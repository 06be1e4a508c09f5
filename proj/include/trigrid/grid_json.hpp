#pragma once

#include <stdexcept>
#include <string>

#include "trigrid/grid.hpp"

namespace trigrid {

/// Raised when grid JSON is malformed, incomplete, or violates grid
/// invariants. The message carries the offending location.
class GridParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Interchange form:
///   {"n": <int>, "original_n": <int|null>, "reductions": <int>,
///    "triangles": [{"r":, "d":, "edges": ["p/q","p/q","p/q"]}, ...]}
/// Triangles row-major, edges ordered left/right/base, rationals as exact
/// base-10 p/q strings. The round trip is bit-exact.
std::string serialize(const Grid& g);

/// Inverse of serialize. Accepts triangles in any order but requires every
/// triangle of the n-row grid exactly once and strictly positive values;
/// anything else raises GridParseError.
Grid deserialize(const std::string& text);

}  // namespace trigrid
