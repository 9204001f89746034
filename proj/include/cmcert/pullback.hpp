#pragma once

// Cube-to-simplex change of variables. For a 5-simplex Sigma in R^6 with
// vertex matrix W (columns = vertices), Z = W o V o U maps [0,1]^5 onto
// Sigma, where
//   U(a,b,c,d,e) = (a, ab, abc, abcd, abcde)
//   V(a,b,c,d,e) = (1-a, a-b, b-c, c-d, d-e, e).
// A polynomial P is nonnegative on Sigma iff P o Z is nonnegative on the cube.

#include <array>
#include <string>

#include "cmcert/chambers.hpp"
#include "cmcert/poly.hpp"

namespace cmcert {

inline constexpr std::size_t kCubeDim = 5;

/// U: cube to the ordered simplex 1 >= a >= b >= c >= d >= e >= 0.
const std::array<Polynomial, kCubeDim>& cube_to_ordered_simplex();
/// V o U: cube to barycentric weights on the standard 5-simplex in R^6.
const std::array<Polynomial, 6>& cube_to_barycentric();

struct PullbackMap {
    std::string simplex_id;
    /// Z^(k) for k = 1..6, each a 5-variable integer polynomial.
    std::array<Polynomial, kEdges> coords;

    /// Z(x) at an exact cube point.
    RationalEdgeList apply(const std::array<Rational, kCubeDim>& x) const;
};

/// Throws std::domain_error for a degenerate simplex.
PullbackMap build_pullback(const LatticeSimplex6& sigma);

/// P o Z for a 6-variable P.
Polynomial pullback(const Polynomial& p, const PullbackMap& map);
Polynomial pullback(const Polynomial& p, const LatticeSimplex6& sigma);

}  // namespace cmcert
