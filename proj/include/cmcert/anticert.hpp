#pragma once

// Anti-certification: exact integer points with f > 0 and g < 0 inside a
// chamber, showing that g * sum(d) - C * f cannot be nonnegative there for
// any C.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cmcert/cayley_menger.hpp"
#include "cmcert/chambers.hpp"

namespace cmcert {

/// Whether the chamber of `dec` belongs to X_beta. Defined for the friendly
/// subsets, the 3-cycle and K4; throws std::invalid_argument otherwise.
bool in_x_beta(const EdgeSubset& beta, const Decoration& dec);

/// Chamber ids (D-simplex ids) inside / outside X_beta, in table order.
std::vector<std::string> chambers_in(const EdgeSubset& beta);
std::vector<std::string> chambers_outside(const EdgeSubset& beta);

struct Witness {
    EdgeSubset beta;
    std::string chamber;
    EdgeList point;
    Integer f;
    Integer g;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
};

struct AntiCertifyOptions {
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 1;
    /// Barycentric weights are snapped to floor(snap * q).
    Integer snap = Integer("10000000000");
    /// Evaluate every trial exactly instead of pre-screening in doubles.
    bool exact_every_trial = false;
    /// Odd trials shrink a random subset of the weights by 1e-4, reaching
    /// witnesses that only exist near a face of the simplex.
    bool face_bias = true;
};

struct AntiCertifyResult {
    std::optional<Witness> witness;
    std::uint64_t trials_run = 0;
    std::uint64_t exact_checks = 0;
};

/// Samples barycentric weights q on the chamber's simplex with the given
/// seed; accepts the first snapped integer point p* = W q* with exact
/// f(p*) > 0, g(p*) < 0 and p* in the chamber.
AntiCertifyResult anti_certify(const std::string& chamber, const EdgeSubset& beta,
                               const AntiCertifyOptions& options = {});

/// g at an integer point as the derivative at t = 0 of the sextic
/// t -> f(p + t * 1_beta), interpolated from seven Bareiss determinants.
Integer g_by_interpolation(const EdgeSubset& beta, const EdgeList& p);

struct WitnessCheck {
    bool tetrahedral_cone = false;  // pseudo-tetrahedron
    bool in_chamber = false;
    bool outside_x_beta = false;
    bool f_matches = false;  // stored f equals both evaluation routes
    bool g_matches = false;
    bool signs = false;  // f > 0, g < 0
    bool ok() const { return tetrahedral_cone && in_chamber && outside_x_beta && f_matches && g_matches && signs; }
};

/// Re-verifies a witness from scratch: f by cofactor expansion and by the
/// Bareiss determinant, g by interpolation and by the stored derivative.
WitnessCheck verify_witness(const Witness& w);

/// One line per witness: <beta> <chamber> <p1..p6> <f> <g>.
void write_witnesses(std::ostream& out, const std::vector<Witness>& ws);
/// Reads the format above; '#' starts a comment. Throws std::runtime_error
/// on malformed lines.
std::vector<Witness> read_witnesses(std::istream& in);

}  // namespace cmcert
