#pragma once

// Polyhedral structure of the normalized pseudo-tetrahedron space X24
// (edge sums equal to 24): the seven extrema, the 3-, 4-, 12- and
// 48-simplex partitions, decorations of K4 and their chambers.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmcert/cayley_menger.hpp"
#include "cmcert/poly.hpp"

namespace cmcert {

using LatticePoint = std::array<std::int64_t, kEdges>;

inline constexpr std::int64_t kNormalization = 24;

struct ExtremePoint {
    std::string label;
    LatticePoint coords;
};

/// A1..A3, B1..B4 in that order.
const std::vector<ExtremePoint>& extrema();
/// The center (4,4,4,4,4,4).
LatticePoint center_point();

/// Resolves "C", "A1".."A3", "B1".."B4" and midpoints such as "A23", "B34".
/// Midpoints must be integral; throws otherwise.
LatticePoint named_point(const std::string& label);

template <typename T>
std::array<T, 4> vertex_sums(const std::array<T, kEdges>& p) {
    return {p[0] + p[1] + p[2], p[0] + p[3] + p[4], p[1] + p[3] + p[5], p[2] + p[4] + p[5]};
}

/// Axis k+1 pairs the opposite edges {12,34}, {13,24}, {14,23}.
template <typename T>
std::array<T, 3> axis_sums(const std::array<T, kEdges>& p) {
    return {p[0] + p[5], p[1] + p[4], p[2] + p[3]};
}

RationalEdgeList to_rational(const LatticePoint& p);
EdgeList to_integer(const LatticePoint& p);

/// Nonnegative entries and all twelve face triangle inequalities (non-strict).
bool in_pseudo_tetrahedra(const RationalEdgeList& p);

/// The edge permutation induced by relabeling vertices.
std::array<std::size_t, kEdges> relabel_action(const VertexPermutation& sigma);

/// A 5-simplex in the hyperplane sum = 24. Column k of the vertex matrix is
/// vertices[k]; this order fixes the cube-to-simplex map.
struct LatticeSimplex6 {
    std::string id;
    std::array<LatticePoint, 6> vertices;

    LatticeSimplex6 relabeled(const VertexPermutation& sigma, std::string new_id) const;
    /// Vertices as an unordered set, for equality regardless of listing order.
    std::vector<LatticePoint> vertex_set() const;
    bool same_vertices(const LatticeSimplex6& other) const;

    /// 5x5 determinant of edge vectors projected to the first five
    /// coordinates; its absolute value is proportional to 5-volume.
    Integer projected_volume_det() const;
    bool nondegenerate() const { return sgn(projected_volume_det()) != 0; }

    /// Exact barycentric coordinates of a point on the hyperplane.
    std::array<Rational, 6> barycentric(const RationalEdgeList& p) const;
    /// Closed containment.
    bool contains(const RationalEdgeList& p) const;
    /// Every vertex of `other` is in this simplex.
    bool contains(const LatticeSimplex6& other) const;

    std::string to_string() const;
};

/// Fast closed-containment test against a fixed simplex: caches the
/// adjugate of the vertex matrix so each query is one integer matrix-vector
/// product.
class SimplexLocator {
public:
    explicit SimplexLocator(const LatticeSimplex6& s);
    /// p need not be normalized to sum 24; only its ray matters for sign,
    /// but the caller must pass points on the hyperplane (up to a positive
    /// common scale).
    bool contains(const std::array<Integer, kEdges>& scaled_point) const;

private:
    std::array<std::array<Integer, 6>, 6> adj_;
    int det_sign_;
};

struct Partitions {
    std::vector<LatticeSimplex6> three;        // A_1..A_3
    std::vector<LatticeSimplex6> four;         // B_1..B_4
    std::vector<LatticeSimplex6> twelve;       // C_ij, i axis, j vertex
    std::vector<LatticeSimplex6> forty_eight;  // D_ijkl
};

/// C_ij = hull of C and the extrema other than A_i, B_j. The D-simplices of
/// C_11 are H(C, B2, B34, A23, B3|B4, A2|A3); the rest are their images
/// under the unique even relabeling taking C_11 to C_ij.
const Partitions& build_partitions();

/// Any simplex of the four partitions by id ("A_2", "B_1", "C_21", "D_1112").
const LatticeSimplex6& simplex_by_id(const std::string& id);

/// The even relabeling carrying C_11 onto C_ij.
VertexPermutation c11_to(int axis, int vertex);

/// A decoration of K4: a Hamiltonian path w-a-b-c with white endpoint w and
/// a black vertex in {b, c}.
class Decoration {
public:
    Decoration(std::array<int, 4> path, int black);

    static const std::vector<Decoration>& all();  // 48 decorations

    const std::array<int, 4>& path() const { return path_; }
    int white() const { return path_[0]; }
    int black() const { return black_; }
    /// The opposite pair contained in the path (its outer edges).
    std::array<std::size_t, 2> outer_edges() const;
    /// The opposite pair disjoint from the path.
    std::array<std::size_t, 2> missing_pair() const;
    /// Edges of the path.
    EdgeSubset edges() const;

    /// Linear forms l with l(p) >= 0 on the chamber:
    /// the outer axis sum is largest, the missing axis sum is smallest, the
    /// black vertex sum is smallest, and the white vertex sum is at most that
    /// of its path neighbor.
    const std::vector<std::array<int, kEdges>>& inequalities() const { return forms_; }

    std::string id() const;
    Decoration relabeled(const VertexPermutation& sigma) const;
    friend bool operator==(const Decoration& a, const Decoration& b) {
        return a.path_ == b.path_ && a.black_ == b.black_;
    }

private:
    std::array<int, 4> path_;
    int black_;
    std::vector<std::array<int, kEdges>> forms_;
};

/// Membership of p in the chamber X_D (non-strict). Throws
/// std::domain_error if p is not a pseudo-tetrahedron.
bool chamber_membership(const Decoration& dec, const RationalEdgeList& p);
/// Strict version: p in the interior of X_D.
bool chamber_interior(const Decoration& dec, const RationalEdgeList& p);

/// Number of distinct facets of the cone over `s` found among the
/// decoration forms and the triangle-inequality forms. A chamber equals the
/// cone over its simplex exactly when this is 6 and every form is
/// nonnegative on every vertex.
int facet_count(const Decoration& dec, const LatticeSimplex6& s);

struct ChamberEntry {
    LatticeSimplex6 simplex;
    Decoration decoration;
};

/// Decoration of each D-simplex: the unique decoration whose inequalities
/// hold at all six vertices. Throws if any simplex has zero or several.
const std::vector<ChamberEntry>& chamber_table();
const ChamberEntry& chamber_by_id(const std::string& id);

struct BarycenterCheck {
    std::string name;
    RationalEdgeList point;
    std::string condition;
    bool ok;
};

/// Recomputes the face barycenters used to identify the partitions and
/// checks the boundary identities they are expected to satisfy.
std::vector<BarycenterCheck> verify_barycenter_conditions();

struct PartitionCoverage {
    std::string name;
    std::size_t simplices = 0;
    Integer total_volume_det;  // sum of |projected det|
    std::size_t min_hits = 0;
    std::size_t max_hits = 0;
    std::size_t tie_free_points = 0;
    std::size_t tie_free_exactly_one = 0;
};

struct PartitionCheckReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    Integer hull_volume_det;
    std::vector<PartitionCoverage> partitions;
    bool ok = false;
};

/// Samples random exact rational points of X24 as convex combinations of
/// the extrema and counts how many simplices of each partition contain them.
PartitionCheckReport partition_check(std::size_t samples, std::uint64_t seed);

std::string to_string(const LatticePoint& p);
std::string to_string(const RationalEdgeList& p);

}  // namespace cmcert
