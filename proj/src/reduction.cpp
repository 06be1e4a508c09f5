#include "trigrid/reduction.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "trigrid/structure.hpp"
#include "trigrid/transforms.hpp"

namespace trigrid {

namespace {

// Star legs of one upright triangle after its delta-wye transform, named
// by clock position: 12 points at the apex, 8 at the bottom-left vertex,
// 4 at the bottom-right vertex.
Rational leg12(const PreType& p) { return delta(p.left, p.right, p.base); }
Rational leg8(const PreType& p) { return delta(p.base, p.left, p.right); }
Rational leg4(const PreType& p) { return delta(p.right, p.base, p.left); }

// All legs of a grid, indexed like the triangle storage.
struct Legs {
    std::vector<Rational> l12, l8, l4;
    int n;

    explicit Legs(const Grid& g) : n(g.n()) {
        const int count = g.triangle_count();
        l12.reserve(count);
        l8.reserve(count);
        l4.reserve(count);
        for (const TriRef t : all_triangles(n)) {
            const PreType& p = g.pretype(t);
            l12.push_back(leg12(p));
            l8.push_back(leg8(p));
            l4.push_back(leg4(p));
        }
    }

    int index(int r, int d) const { return r * (r - 1) / 2 + d - 1; }
    const Rational& y12(int r, int d) const { return l12[index(r, d)]; }
    const Rational& y8(int r, int d) const { return l8[index(r, d)]; }
    const Rational& y4(int r, int d) const { return l4[index(r, d)]; }
};

Grid::Provenance next_provenance(const Grid& g) {
    if (g.provenance()) return {g.provenance()->original_n, g.provenance()->reductions + 1};
    return {g.n(), 1};
}

}  // namespace

ReductionStep reduce_once(const Grid& g) {
    const int m = g.n();
    if (m < 2)
        throw std::invalid_argument("reduce_once: grid has a single row; use reduce_final");

    const Legs legs(g);
    std::vector<PreType> child;
    child.reserve(static_cast<size_t>(m - 1) * m / 2);
    for (int r = 1; r <= m - 1; ++r) {
        for (int d = 1; d <= r; ++d) {
            PreType p;
            // Left edge: boundary series when d = 1, else the star at the
            // parent vertex shared by <r,d-1>, <r,d>, <r+1,d>.
            p.left = d == 1 ? legs.y8(r, 1) + legs.y12(r + 1, 1)
                            : wye(legs.y4(r, d - 1), legs.y8(r, d), legs.y12(r + 1, d));
            // Right edge: boundary series when d = r.
            p.right = d == r ? legs.y4(r, r) + legs.y12(r + 1, r + 1)
                             : wye(legs.y8(r, d + 1), legs.y12(r + 1, d + 1), legs.y4(r, d));
            // Base edge: bottom boundary series on the child's last row.
            p.base = r == m - 1 ? legs.y4(m, d) + legs.y8(m, d + 1)
                                : wye(legs.y12(r + 2, d + 1), legs.y4(r + 1, d), legs.y8(r + 1, d + 1));
            child.push_back(std::move(p));
        }
    }
    CornerTails tails{legs.y12(1, 1), legs.y8(m, 1), legs.y4(m, m)};
    return {Grid(m - 1, std::move(child), next_provenance(g)), std::move(tails)};
}

CornerTails reduce_final(const Grid& g) {
    if (g.n() != 1)
        throw std::invalid_argument("reduce_final: expected a single-triangle grid, got " +
                                    std::to_string(g.n()) + " rows");
    const PreType& p = g.pretype({1, 1});
    return {leg12(p), leg8(p), leg4(p)};
}

ReductionTrace reduce_to(const Grid& g, int k_prime) {
    if (k_prime < 1 || k_prime > g.n())
        throw std::invalid_argument("reduce_to: target row count " + std::to_string(k_prime) +
                                    " outside 1.." + std::to_string(g.n()));
    ReductionTrace trace{g, {}};
    while (trace.grid.n() > k_prime) {
        ReductionStep step = reduce_once(trace.grid);
        trace.tails.push_back(std::move(step.tails));
        trace.grid = std::move(step.child);
    }
    return trace;
}

std::vector<Rational> top_tail_sequence(int n) {
    if (n < 1) throw std::invalid_argument("top_tail_sequence: n must be >= 1");
    std::vector<Rational> tails;
    tails.reserve(n);
    Grid g = make_uniform_grid(n, Rational(1));
    while (g.n() >= 2) {
        ReductionStep step = reduce_once(g);
        tails.push_back(std::move(step.tails.top));
        g = std::move(step.child);
    }
    tails.push_back(reduce_final(g).top);
    return tails;
}

Rational corner_resistance(int n) {
    Rational sum;
    for (const Rational& t : top_tail_sequence(n)) sum += t;
    return Rational(2) * sum;
}

namespace {

const PreType& parent(const Grid& g, int r, int d, const char* fn) {
    if (d < 1 || d > r || r > g.n())
        throw std::out_of_range(std::string(fn) + ": needs parent triangle <" + std::to_string(r) +
                                "," + std::to_string(d) + "> outside " + std::to_string(g.n()) +
                                "-row grid");
    return g.pretype({r, d});
}

}  // namespace

Rational base_edge_value(const Grid& g, int r, int d) {
    if (r > g.n() - 2)
        throw std::out_of_range("base_edge_value: requires r <= n - 2");
    const PreType& below_left = parent(g, r + 1, d, "base_edge_value");
    const PreType& below_right = parent(g, r + 1, d + 1, "base_edge_value");
    const PreType& lower = parent(g, r + 2, d + 1, "base_edge_value");
    return wye(leg12(lower), leg4(below_left), leg8(below_right));
}

Rational boundary_edge_value(const Grid& g, int r) {
    if (r > g.n() - 1)
        throw std::out_of_range("boundary_edge_value: requires r <= n - 1");
    const PreType& upper = parent(g, r, 1, "boundary_edge_value");
    const PreType& lower = parent(g, r + 1, 1, "boundary_edge_value");
    return leg8(upper) + leg12(lower);
}

Rational left_edge_value(const Grid& g, int r, int d) {
    if (d < 2) throw std::out_of_range("left_edge_value: requires d >= 2");
    if (r > g.n() - 1)
        throw std::out_of_range("left_edge_value: requires r <= n - 1");
    const PreType& west = parent(g, r, d - 1, "left_edge_value");
    const PreType& here = parent(g, r, d, "left_edge_value");
    const PreType& below = parent(g, r + 1, d, "left_edge_value");
    return wye(leg4(west), leg8(here), leg12(below));
}

Rational right_edge_value(const Grid& g, int r, int d) {
    if (d > r - 1) throw std::out_of_range("right_edge_value: requires d <= r - 1");
    if (r > g.n() - 1)
        throw std::out_of_range("right_edge_value: requires r <= n - 1");
    const PreType& here = parent(g, r, d, "right_edge_value");
    const PreType& east = parent(g, r, d + 1, "right_edge_value");
    const PreType& below = parent(g, r + 1, d + 1, "right_edge_value");
    return wye(leg8(east), leg12(below), leg4(here));
}

Grid reduce_once_symmetric(const Grid& g) {
    const int m = g.n();
    if (m < 2)
        throw std::invalid_argument("reduce_once_symmetric: grid has a single row");
    if (!is_symmetric(g))
        throw std::invalid_argument("reduce_once_symmetric: grid lacks full grid symmetry");

    std::map<TriRef, PreType> half;
    for (const TriRef t : upper_left_half(m - 1)) {
        PreType p;
        p.left = t.d == 1 ? boundary_edge_value(g, t.r) : left_edge_value(g, t.r, t.d);
        // <1,1> is its own mirror image, so its right edge equals its left.
        p.right = t.d == t.r ? p.left : right_edge_value(g, t.r, t.d);
        // For a 2-row input the child's base edge follows by rotational
        // symmetry; otherwise the base calculator applies.
        p.base = t.r > m - 2 ? p.left : base_edge_value(g, t.r, t.d);
        half.emplace(t, std::move(p));
    }
    Grid child = complete_from_upper_left_half(m - 1, half);
    return child.with_provenance(next_provenance(g));
}

}  // namespace trigrid
