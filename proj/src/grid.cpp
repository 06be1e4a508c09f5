#include "trigrid/grid.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace trigrid {

std::string to_string(const TriRef& t) {
    return "<" + std::to_string(t.r) + "," + std::to_string(t.d) + ">";
}

std::string to_string(const EdgeRef& e) {
    return "<" + std::to_string(e.tri.r) + "," + std::to_string(e.tri.d) + "," +
           std::to_string(static_cast<int>(e.e)) + ">";
}

bool same_type(const PreType& p, const PreType& q) {
    // Orbit of p under the group generated by the left/right swap and the
    // cyclic rotations: all six arrangements of the triple.
    const std::array<PreType, 6> orbit = {{
        {p.left, p.right, p.base},
        {p.base, p.left, p.right},
        {p.right, p.base, p.left},
        {p.right, p.left, p.base},
        {p.left, p.base, p.right},
        {p.base, p.right, p.left},
    }};
    return std::find(orbit.begin(), orbit.end(), q) != orbit.end();
}

Grid::Grid(int n, std::vector<PreType> labels, std::optional<Provenance> provenance)
    : n_(n), labels_(std::move(labels)), provenance_(std::move(provenance)) {
    if (n_ < 1) throw std::invalid_argument("Grid: row count must be >= 1");
    if (static_cast<int>(labels_.size()) != triangle_count())
        throw std::invalid_argument("Grid: expected " + std::to_string(triangle_count()) +
                                    " triangles, got " + std::to_string(labels_.size()));
    for (const PreType& p : labels_) {
        if (!p.left.is_positive() || !p.right.is_positive() || !p.base.is_positive())
            throw std::invalid_argument("Grid: edge resistances must be strictly positive");
    }
}

const PreType& Grid::pretype(TriRef t) const {
    if (!contains(t))
        throw std::out_of_range("Grid: triangle " + to_string(t) + " outside " +
                                std::to_string(n_) + "-row grid");
    return labels_[index(t)];
}

Grid Grid::with_edge(EdgeRef ref, const Rational& v) const {
    if (!v.is_positive())
        throw std::invalid_argument("Grid: edge value must be strictly positive, got " + v.to_string());
    if (!contains(ref.tri))
        throw std::out_of_range("Grid: triangle " + to_string(ref.tri) + " outside " +
                                std::to_string(n_) + "-row grid");
    Grid copy = *this;
    PreType& p = copy.labels_[index(ref.tri)];
    switch (ref.e) {
        case Edge::left: p.left = v; break;
        case Edge::right: p.right = v; break;
        case Edge::base: p.base = v; break;
    }
    return copy;
}

Grid Grid::with_provenance(std::optional<Provenance> p) const {
    Grid copy = *this;
    copy.provenance_ = std::move(p);
    return copy;
}

Grid make_uniform_grid(int n, const Rational& label) {
    if (n < 1) throw std::invalid_argument("make_uniform_grid: n must be >= 1");
    if (!label.is_positive())
        throw std::invalid_argument("make_uniform_grid: label must be strictly positive");
    std::vector<PreType> labels(static_cast<size_t>(n) * (n + 1) / 2, PreType{label, label, label});
    return Grid(n, std::move(labels), Grid::Provenance{n, 0});
}

const Rational& get_edge(const Grid& g, EdgeRef ref) { return g.edge(ref); }

Grid set_edge(const Grid& g, EdgeRef ref, const Rational& v) { return g.with_edge(ref, v); }

const PreType& pretype(const Grid& g, TriRef t) { return g.pretype(t); }

std::vector<TriRef> all_triangles(int n) {
    std::vector<TriRef> out;
    out.reserve(static_cast<size_t>(n) * (n + 1) / 2);
    for (int r = 1; r <= n; ++r)
        for (int d = 1; d <= r; ++d) out.push_back({r, d});
    return out;
}

std::vector<EdgeRef> all_edges(int n) {
    std::vector<EdgeRef> out;
    out.reserve(static_cast<size_t>(n) * (n + 1) * 3 / 2);
    for (const TriRef t : all_triangles(n))
        for (Edge e : {Edge::left, Edge::right, Edge::base}) out.push_back({t, e});
    return out;
}

}  // namespace trigrid
