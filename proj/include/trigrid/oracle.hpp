#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "trigrid/weighted_graph.hpp"

namespace trigrid {

/// Raised when an effective-resistance query spans disconnected vertices.
class NoPathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The three degree-2 corner vertices of the n-row grid embedding:
/// {top (n,n), bottom-left (0,0), bottom-right (2n,0)}.
std::array<Vertex, 3> corner_vertices(int n);

/// Exact effective resistance between u and v: v is grounded and the
/// reduced Laplacian system is solved by fraction-free (Bareiss)
/// elimination over integers, so the result is an exact rational.
/// Throws std::invalid_argument for u == v or unknown vertices and
/// NoPathError for a disconnected graph.
Rational effective_resistance(const WeightedGraph& wg, Vertex u, Vertex v);

/// Floating-point companion of effective_resistance for trend reports
/// beyond exact-solve reach. Error is unquantified.
double float_effective_resistance(const WeightedGraph& wg, Vertex u, Vertex v);

/// Determinant by integer-preserving elimination; consumes its argument.
/// The empty matrix has determinant 1.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

}  // namespace trigrid
