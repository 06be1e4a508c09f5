#include "trigrid/weighted_graph.hpp"

#include <stdexcept>

namespace trigrid {

std::string to_string(const Vertex& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

void WeightedGraph::add_edge(Vertex u, Vertex v, const Rational& conductance) {
    if (u == v) throw std::invalid_argument("WeightedGraph: self-loop at " + to_string(u));
    if (!conductance.is_positive())
        throw std::invalid_argument("WeightedGraph: conductance must be strictly positive");
    const auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    if (edges_.count(key))
        throw std::invalid_argument("WeightedGraph: duplicate edge " + to_string(u) + "-" + to_string(v));
    vertices_.insert(u);
    vertices_.insert(v);
    edges_.emplace(key, conductance);
}

int WeightedGraph::degree(Vertex v) const {
    int deg = 0;
    for (const auto& [key, c] : edges_)
        if (key.first == v || key.second == v) ++deg;
    return deg;
}

const Rational& WeightedGraph::conductance(Vertex u, Vertex v) const {
    const auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    const auto it = edges_.find(key);
    if (it == edges_.end())
        throw std::out_of_range("WeightedGraph: no edge " + to_string(u) + "-" + to_string(v));
    return it->second;
}

TriangleVertices triangle_vertices(int n, TriRef t) {
    // Triangle row r sits between lattice heights n-r (base) and n-r+1 (apex).
    const int y_base = n - t.r;
    const int x_left = 2 * (t.d - 1) + y_base;
    return {
        Vertex{x_left + 1, y_base + 1},
        Vertex{x_left, y_base},
        Vertex{x_left + 2, y_base},
    };
}

std::pair<Vertex, Vertex> edge_vertices(int n, EdgeRef ref) {
    const TriangleVertices tv = triangle_vertices(n, ref.tri);
    switch (ref.e) {
        case Edge::left: return {tv.top, tv.bottom_left};
        case Edge::right: return {tv.top, tv.bottom_right};
        default: return {tv.bottom_left, tv.bottom_right};
    }
}

WeightedGraph to_weighted_graph(const Grid& g) {
    WeightedGraph wg;
    const int n = g.n();
    for (const EdgeRef ref : all_edges(n)) {
        const auto [u, v] = edge_vertices(n, ref);
        wg.add_edge(u, v, Rational(1) / g.edge(ref));
    }
    return wg;
}

}  // namespace trigrid
