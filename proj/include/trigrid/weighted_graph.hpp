#pragma once

#include <compare>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "trigrid/grid.hpp"
#include "trigrid/rational.hpp"

namespace trigrid {

/// Integer lattice point naming a circuit node.
struct Vertex {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

/// Plain vertex/edge realization of a resistor network: each undirected
/// edge carries a strictly positive conductance (1/resistance). At most one
/// edge per vertex pair.
class WeightedGraph {
public:
    void add_vertex(Vertex v) { vertices_.insert(v); }

    /// Inserts an edge; both endpoints are added as vertices. Throws
    /// std::invalid_argument on a self-loop, a duplicate edge, or a
    /// non-positive conductance.
    void add_edge(Vertex u, Vertex v, const Rational& conductance);

    bool has_vertex(Vertex v) const { return vertices_.count(v) > 0; }
    const std::set<Vertex>& vertices() const { return vertices_; }
    const std::map<std::pair<Vertex, Vertex>, Rational>& edges() const { return edges_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    int degree(Vertex v) const;

    /// Conductance of edge {u, v}; throws std::out_of_range when absent.
    const Rational& conductance(Vertex u, Vertex v) const;

private:
    std::set<Vertex> vertices_;
    std::map<std::pair<Vertex, Vertex>, Rational> edges_;  // key ordered (min, max)
};

/// Vertex positions of a triangle's three corners in the lattice embedding
/// of an n-row grid: {top, bottom-left, bottom-right}.
struct TriangleVertices {
    Vertex top;
    Vertex bottom_left;
    Vertex bottom_right;
};
TriangleVertices triangle_vertices(int n, TriRef t);

/// Lattice endpoints of a grid edge in an n-row grid.
std::pair<Vertex, Vertex> edge_vertices(int n, EdgeRef ref);

/// Realizes the grid as a weighted graph on the integer lattice
/// {(2r+s, s) : 0 <= r <= n, 0 <= s <= n-r}; each graph edge gets
/// conductance 1/resistance of the unique upright-triangle edge that
/// coincides with it.
WeightedGraph to_weighted_graph(const Grid& g);

}  // namespace trigrid
