#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "trigrid/rational.hpp"

namespace trigrid {

/// Upright triangle address: row (top to bottom) and diagonal (left to
/// right), both 1-based. Row r of an n-row grid holds diagonals 1..r.
struct TriRef {
    int r = 0;
    int d = 0;
    friend auto operator<=>(const TriRef&, const TriRef&) = default;
};

/// Edge selector within an upright triangle. Underlying values match the
/// conventional 1/2/3 numbering of the left, right and base sides.
enum class Edge : int { left = 1, right = 2, base = 3 };

struct EdgeRef {
    TriRef tri;
    Edge e = Edge::left;
    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

std::string to_string(const TriRef& t);
std::string to_string(const EdgeRef& e);

/// Ordered edge-value triple of a triangle, clockwise from the left edge.
struct PreType {
    Rational left;
    Rational right;
    Rational base;

    const Rational& edge(Edge e) const {
        switch (e) {
            case Edge::left: return left;
            case Edge::right: return right;
            default: return base;
        }
    }
    friend bool operator==(const PreType&, const PreType&) = default;
};

/// True when the two triples coincide up to the label symmetries of an
/// upright triangle (left/right swap and the two cyclic rotations), i.e.
/// when the triangles are of the same type.
bool same_type(const PreType& p, const PreType& q);

/// Labeled triangular grid: a total mapping from upright triangles to
/// strictly positive edge triples. Every physical grid edge is stored
/// once, on the unique upright triangle it belongs to; downward triangles
/// carry no labels. Grids are immutable values; updates produce copies.
class Grid {
public:
    /// Reduction lineage: the row count this grid was derived from and how
    /// many row reductions were applied. Not part of grid equality.
    struct Provenance {
        int original_n = 0;
        int reductions = 0;
        friend bool operator==(const Provenance&, const Provenance&) = default;
    };

    Grid(int n, std::vector<PreType> labels, std::optional<Provenance> provenance = std::nullopt);

    int n() const { return n_; }
    int triangle_count() const { return n_ * (n_ + 1) / 2; }
    bool contains(TriRef t) const { return 1 <= t.d && t.d <= t.r && t.r <= n_; }

    const PreType& pretype(TriRef t) const;
    const Rational& edge(EdgeRef ref) const { return pretype(ref.tri).edge(ref.e); }

    /// Value-semantics update: returns a copy with one edge replaced.
    Grid with_edge(EdgeRef ref, const Rational& v) const;

    const std::optional<Provenance>& provenance() const { return provenance_; }
    Grid with_provenance(std::optional<Provenance> p) const;

    /// Label equality; provenance is ignored.
    friend bool operator==(const Grid& a, const Grid& b) {
        return a.n_ == b.n_ && a.labels_ == b.labels_;
    }

private:
    int n_;
    std::vector<PreType> labels_;  // row-major: (r,d) at r(r-1)/2 + d - 1
    std::optional<Provenance> provenance_;

    static int index(TriRef t) { return t.r * (t.r - 1) / 2 + t.d - 1; }
};

/// n-row grid with every edge of every upright triangle set to `label`.
/// Throws std::invalid_argument for n < 1 or label <= 0.
Grid make_uniform_grid(int n, const Rational& label);

const Rational& get_edge(const Grid& g, EdgeRef ref);
Grid set_edge(const Grid& g, EdgeRef ref, const Rational& v);
const PreType& pretype(const Grid& g, TriRef t);

/// All triangle addresses of an n-row grid in row-major order.
std::vector<TriRef> all_triangles(int n);

/// All edge addresses of an n-row grid in row-major, left/right/base order.
std::vector<EdgeRef> all_edges(int n);

}  // namespace trigrid
