#pragma once

#include <array>
#include <stdexcept>

#include "trigrid/rational.hpp"

namespace trigrid {

// The three circuit-equivalence kernels. All arguments are resistances and
// must be strictly positive; non-positive inputs throw
// std::invalid_argument. Everything is exact.

namespace detail {
inline void require_positive(const Rational& v, const char* fn) {
    if (!v.is_positive())
        throw std::invalid_argument(std::string(fn) + ": resistance must be strictly positive, got " +
                                    v.to_string());
}
}  // namespace detail

/// Two resistors sharing a degree-2 node collapse to one of value a + b.
inline Rational series(const Rational& a, const Rational& b) {
    detail::require_positive(a, "series");
    detail::require_positive(b, "series");
    return a + b;
}

/// Star leg produced by a delta-wye transform: xy / (x + y + z). The first
/// two arguments are the two triangle edges adjacent at the vertex that
/// receives the resulting leg.
inline Rational delta(const Rational& x, const Rational& y, const Rational& z) {
    detail::require_positive(x, "delta");
    detail::require_positive(y, "delta");
    detail::require_positive(z, "delta");
    return (x * y) / (x + y + z);
}

/// Triangle edge produced by a wye-delta transform: (xy + yz + zx) / x. The
/// first argument is the star leg perpendicular to (not incident on) the
/// resulting edge; the function is symmetric in its last two arguments.
inline Rational wye(const Rational& x, const Rational& y, const Rational& z) {
    detail::require_positive(x, "wye");
    detail::require_positive(y, "wye");
    detail::require_positive(z, "wye");
    return (x * y + y * z + z * x) / x;
}

/// Full triangle-to-star transform. Input (R_A, R_B, R_C) are the triangle
/// edges with R_A opposite node 1, R_B opposite node 2, R_C opposite node 3;
/// output leg i attaches at node i.
inline std::array<Rational, 3> delta_to_y(const Rational& ra, const Rational& rb, const Rational& rc) {
    detail::require_positive(ra, "delta_to_y");
    detail::require_positive(rb, "delta_to_y");
    detail::require_positive(rc, "delta_to_y");
    const Rational sum = ra + rb + rc;
    return {(rb * rc) / sum, (ra * rc) / sum, (ra * rb) / sum};
}

/// Full star-to-triangle transform, inverse of delta_to_y.
inline std::array<Rational, 3> y_to_delta(const Rational& r1, const Rational& r2, const Rational& r3) {
    detail::require_positive(r1, "y_to_delta");
    detail::require_positive(r2, "y_to_delta");
    detail::require_positive(r3, "y_to_delta");
    const Rational pairs = r1 * r2 + r1 * r3 + r2 * r3;
    return {pairs / r1, pairs / r2, pairs / r3};
}

}  // namespace trigrid
