#pragma once

#include <vector>

#include "trigrid/grid.hpp"

namespace trigrid {

/// The three degree-1 star legs left hanging at the grid corners by one
/// row reduction. They carry the corner-to-corner resistance bookkeeping;
/// for a fully symmetric grid all three are equal.
struct CornerTails {
    Rational top;
    Rational bottom_left;
    Rational bottom_right;
    friend bool operator==(const CornerTails&, const CornerTails&) = default;
};

struct ReductionStep {
    Grid child;
    CornerTails tails;
};

/// One row reduction: delta-wye on every upright triangle, tails retained
/// at the three corners, series sums on consecutive boundary leg pairs,
/// wye-delta on the interior stars. The result is an (n-1)-row grid that
/// is electrically equivalent to the input between corner vertices once
/// the tails are accounted for. Requires n >= 2.
ReductionStep reduce_once(const Grid& g);

/// Final star transform of a single-triangle grid: returns its three
/// legs as tails. Requires n == 1.
CornerTails reduce_final(const Grid& g);

struct ReductionTrace {
    Grid grid;
    std::vector<CornerTails> tails;  // one entry per reduction applied
};

/// Applies reduce_once (g.n - k_prime) times, accumulating tails in order.
/// Requires 1 <= k_prime <= g.n.
ReductionTrace reduce_to(const Grid& g, int k_prime);

/// Top tails of all n reductions of the uniform ones-grid (the n-1 row
/// reductions followed by the final star transform).
std::vector<Rational> top_tail_sequence(int n);

/// Resistance between two degree-2 corner vertices of the uniform
/// ones-grid: twice the sum of the top tails over all n reductions.
Rational corner_resistance(int n);

// Local single-edge calculators: each computes one child edge of a row
// reduction from the handful of parent triangles that determine it. They
// agree exactly with reduce_once wherever their preconditions hold and
// double as an independent route for cross-checking it.

/// Child base edge <r,d,3> from parent triangles <r+1,d>, <r+1,d+1>,
/// <r+2,d+1>. Requires r <= g.n - 2 and 1 <= d <= r.
Rational base_edge_value(const Grid& g, int r, int d);

/// Child left boundary edge <r,1,1> from parent triangles <r,1>, <r+1,1>.
/// Requires 1 <= r <= g.n - 1.
Rational boundary_edge_value(const Grid& g, int r);

/// Child left edge <r,d,1> from parent triangles <r,d-1>, <r,d>, <r+1,d>.
/// Requires d >= 2 and r <= g.n - 1.
Rational left_edge_value(const Grid& g, int r, int d);

/// Child right edge <r,d,2> from parent triangles <r,d>, <r,d+1>,
/// <r+1,d+1>. Requires d <= r - 1 and r <= g.n - 1.
Rational right_edge_value(const Grid& g, int r, int d);

/// Alternative reduction route for symmetric grids: computes the child's
/// upper-left half with the single-edge calculators and completes the rest
/// by symmetry. Equals reduce_once(g).child whenever g is symmetric.
Grid reduce_once_symmetric(const Grid& g);

}  // namespace trigrid
