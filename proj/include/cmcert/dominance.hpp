#pragma once

// The Method of Positive Dominance.
//
// A polynomial sum A_I x^I is weak positive dominant (WPD) when every
// partial sum over the lower box {I' <= I} is nonnegative; WPD implies
// nonnegativity on the unit cube. The certifier halves the cube along the
// coordinate picked by a marker until every piece is WPD, or until some
// piece is negative at its corner.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmcert/poly.hpp"

namespace cmcert {

/// Per-variable degree cap for polynomials entering the certifier.
inline constexpr int kDegreeCap = 6;

/// Dense coefficient array over the box [0, E_1] x ... x [0, E_n], where E
/// is the degree envelope. Subdivision preserves the envelope, so the
/// layout never changes during certification.
class DenseBoxPoly {
public:
    DenseBoxPoly() = default;
    explicit DenseBoxPoly(const Polynomial& p);

    Polynomial to_polynomial() const;

    std::size_t nvars() const { return nvars_; }
    const Exponents& envelope() const { return envelope_; }
    const Integer& constant_term() const { return coeffs_.front(); }
    std::size_t nonzero_terms() const;

    bool is_wpd() const;
    /// 2^E * P(.., x_j / 2, ..), E = envelope_j.
    DenseBoxPoly dilated(std::size_t axis) const;
    /// P(.., 1 - x_j, ..).
    DenseBoxPoly reflected(std::size_t axis) const;

private:
    std::size_t nvars_ = 0;
    Exponents envelope_{};
    std::array<std::size_t, kMaxVars> strides_{};
    std::vector<Integer> coeffs_;
};

bool is_wpd(const Polynomial& p);

/// The k-rotation: exponent of x_i moves to position i+k (cyclically).
Polynomial rotate(const Polynomial& p, int k);
/// 2^E * p(x_1 / 2, x_2, ...), E the largest exponent of x_1.
Polynomial dilate_first(const Polynomial& p);
/// p(1 - x_1, x_2, ...).
Polynomial reflect_first(const Polynomial& p);
/// Constant term is negative.
bool negative_at_origin(const Polynomial& p);

/// Per-coordinate subdivision depths.
struct Marker {
    std::vector<int> depths;

    explicit Marker(std::size_t n = 5) : depths(n, 0) {}
    /// Index of the first minimum entry.
    std::size_t youngest() const;
    Marker successor() const;
    int total() const;
    friend bool operator==(const Marker&, const Marker&) = default;
};

struct Split {
    std::size_t axis;  // 0-based coordinate
    bool right;        // false: lower half [0,1/2]; true: upper half, reflected
    friend bool operator==(const Split&, const Split&) = default;
};

std::string lineage_string(const std::vector<Split>& lineage);

struct MarkedBox {
    DenseBoxPoly poly;
    Marker marker;
    std::vector<Split> lineage;

    std::size_t depth() const { return lineage.size(); }
};

MarkedBox initial_box(const Polynomial& p);

/// Splits along the marker's youngest coordinate j. Left child is
/// P o A_j, right child is P o B_j o A_j (reflect, then dilate), both
/// rescaled by 2^E to stay integral and both carrying the successor marker.
std::pair<MarkedBox, MarkedBox> subdivide(const MarkedBox& box);

/// Cube point corresponding to the box corner x = 0 after the lineage.
std::vector<Rational> lineage_corner(const std::vector<Split>& lineage, std::size_t nvars);

enum class CertificateStatus { Nonnegative, NegativeWitness, BudgetExhausted };
std::string to_string(CertificateStatus s);

struct Certificate {
    CertificateStatus status = CertificateStatus::BudgetExhausted;
    /// Pop-and-test iterations.
    std::uint64_t steps = 0;
    std::uint64_t wpd_tests = 0;
    std::uint64_t subdivisions = 0;
    std::uint64_t leaves = 0;
    std::size_t max_depth = 0;
    std::vector<std::uint64_t> splits_per_coordinate;
    std::size_t max_terms = 0;
    bool parallel = false;
    /// Sequential runs only: one character per step in pop order, 'W' for a
    /// WPD leaf, 'S' for a split, 'N' for the negative corner that stopped
    /// the run. Replaying it re-derives every leaf.
    std::string trace;

    std::vector<Split> witness_lineage;
    std::vector<Rational> witness_corner;
    /// Value of the certified polynomial at witness_corner.
    Rational witness_value;
};

struct CertifyOptions {
    std::uint64_t budget = 1'000'000;
    bool parallel = false;
    unsigned threads = 0;  // 0: hardware concurrency
    int degree_cap = kDegreeCap;
};

/// Divide-and-conquer certification on [0,1]^n. Sequential mode pops the
/// last box, tests the origin for negativity, then WPD, and otherwise
/// pushes (left, right). Throws std::invalid_argument if some variable
/// exceeds the degree cap.
Certificate certify(const Polynomial& p, const CertifyOptions& options = {});

/// Re-derives a sequential Nonnegative certificate from its trace. Returns
/// false if any recorded leaf fails WPD or the trace does not match.
bool replay(const Polynomial& p, const Certificate& cert);

}  // namespace cmcert
