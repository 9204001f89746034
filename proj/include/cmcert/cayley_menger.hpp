#pragma once

// The Cayley-Menger determinant of four points as a polynomial in the six
// edge lengths, its directional derivatives along edge subsets, and the
// tetrahedrality predicate.
//
// Coordinates are always ordered (d12, d13, d14, d23, d24, d34).

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmcert/poly.hpp"

namespace cmcert {

inline constexpr std::size_t kEdges = 6;

/// An edge {i, j} of K4 with 1 <= i < j <= 4.
struct Edge {
    int i;
    int j;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Coordinate slot (0..5) of the edge {i, j}; order of i, j is irrelevant.
std::size_t edge_index(int i, int j);
Edge edge_at(std::size_t index);

/// A permutation of the vertex labels {1,2,3,4}, stored 0-based.
class VertexPermutation {
public:
    VertexPermutation();  // identity
    /// images[k] is the image of vertex k+1, given 1-based.
    explicit VertexPermutation(std::array<int, 4> images_one_based);

    static std::vector<VertexPermutation> all();   // S4, 24 elements
    static std::vector<VertexPermutation> even();  // A4, 12 elements

    int operator()(int vertex) const { return map_[vertex - 1] + 1; }
    bool is_even() const;
    VertexPermutation inverse() const;
    friend VertexPermutation operator*(const VertexPermutation& a, const VertexPermutation& b);  // a after b
    friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

    /// Induced action on coordinate slots: edge slot k goes to slot result[k].
    std::array<std::size_t, kEdges> edge_action() const;

    std::string to_string() const;

private:
    std::array<int, 4> map_;
};

/// Relabels a 6-vector of edge values: out[sigma(e)] = in[e].
template <typename T>
std::array<T, kEdges> relabel(const VertexPermutation& sigma, const std::array<T, kEdges>& in) {
    auto act = sigma.edge_action();
    std::array<T, kEdges> out{};
    for (std::size_t k = 0; k < kEdges; ++k) out[act[k]] = in[k];
    return out;
}

enum class EdgeSubsetKind {
    Empty,
    SingleEdge,
    IncidentPair,
    OppositePair,
    Tripod,
    ThreePath,
    ThreeCycle,
    FourCycle,
    ComplementOfIncidentPair,
    ComplementOfEdge,
    FullK4,
};

std::string to_string(EdgeSubsetKind kind);

/// A subset of the edges of K4, as a bitmask over coordinate slots.
class EdgeSubset {
public:
    constexpr EdgeSubset() = default;
    explicit constexpr EdgeSubset(std::uint8_t mask) : mask_(mask & 0x3F) {}
    EdgeSubset(std::initializer_list<Edge> edges);

    static constexpr EdgeSubset full() { return EdgeSubset(0x3F); }

    /// Accepts "K4", "all", or a comma-separated list such as "12,34" or "e12,e34".
    static EdgeSubset parse(const std::string& text);

    std::uint8_t mask() const { return mask_; }
    bool contains(std::size_t slot) const { return (mask_ >> slot) & 1U; }
    bool contains(Edge e) const { return contains(edge_index(e.i, e.j)); }
    int size() const;
    bool empty() const { return mask_ == 0; }
    std::vector<std::size_t> slots() const;
    EdgeSubset complement() const { return EdgeSubset(static_cast<std::uint8_t>(~mask_ & 0x3F)); }

    EdgeSubsetKind kind() const;
    /// The complement is not a set of edges sharing one vertex.
    bool friendly() const;

    EdgeSubset relabeled(const VertexPermutation& sigma) const;

    /// Canonical text, e.g. "12,34" or "K4".
    std::string to_string() const;

    friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;
    friend auto operator<=>(const EdgeSubset&, const EdgeSubset&) = default;

private:
    std::uint8_t mask_ = 0;
};

/// The stabilizer of beta in S4.
std::vector<VertexPermutation> stabilizer(const EdgeSubset& beta);

/// f: determinant of the bordered 5x5 matrix of squared distances,
/// homogeneous of degree 6 in the edge lengths. Built once by symbolic
/// expansion and cached.
const Polynomial& cm_f();

/// f-hat: the same determinant with the squared lengths q_ij as variables
/// (degree 3), so that f-hat(d^2) = f(d).
const Polynomial& cm_f_on_squares();

/// Independent expansion of the same determinant by cofactors along the
/// first row. Used as a second evaluation route.
Polynomial build_f_by_cofactors();
Polynomial build_f();
Polynomial build_f_on_squares();

/// Exact f(D) by evaluating the bordered determinant numerically
/// (fraction-free elimination), bypassing the stored polynomial.
Integer cm_determinant_value(std::span<const Integer, kEdges> d);

/// Partial derivatives of f, one per coordinate, cached.
const std::array<Polynomial, kEdges>& cm_partials();

/// g_beta = sum over edges e in beta of the partial of f along d_e.
/// Throws std::invalid_argument on an empty subset.
Polynomial directional_derivative(const EdgeSubset& beta);

/// a*g_beta + b*f.
Polynomial combination(const EdgeSubset& beta, const Integer& a, const Integer& b);

using EdgeList = std::array<Integer, kEdges>;
using RationalEdgeList = std::array<Rational, kEdges>;

/// Scales a positive rational list to an integer list on the same ray.
EdgeList clear_denominators(const RationalEdgeList& d);

/// Strict triangle inequality on every face and f(D) > 0. Throws on a
/// nonpositive entry.
bool is_tetrahedral(const RationalEdgeList& d);
bool is_tetrahedral(const EdgeList& d);

/// f(D) / 288, the squared volume. Throws if D is not tetrahedral.
Rational volume_squared(const RationalEdgeList& d);

/// 16 * area^2 of a triangle given squared side lengths:
/// 2ab + 2bc + 2ca - a^2 - b^2 - c^2. Positive iff the square roots satisfy
/// the strict triangle inequalities.
Integer heron_squared_form(const Integer& a, const Integer& b, const Integer& c);

/// The four faces as coordinate-slot triples.
const std::array<std::array<std::size_t, 3>, 4>& faces();

}  // namespace cmcert
