#include "cmcert/pullback.hpp"

#include <stdexcept>

namespace cmcert {

const std::array<Polynomial, kCubeDim>& cube_to_ordered_simplex() {
    static const std::array<Polynomial, kCubeDim> u = [] {
        std::array<Polynomial, kCubeDim> out;
        Polynomial acc = Polynomial::constant(kCubeDim, 1);
        for (std::size_t k = 0; k < kCubeDim; ++k) {
            acc = acc * Polynomial::variable(kCubeDim, k);
            out[k] = acc;
        }
        return out;
    }();
    return u;
}

const std::array<Polynomial, 6>& cube_to_barycentric() {
    static const std::array<Polynomial, 6> bary = [] {
        // V as linear polynomials, then composed with U.
        std::array<Polynomial, 6> v;
        const std::size_t n = kCubeDim;
        v[0] = Polynomial::constant(n, 1) - Polynomial::variable(n, 0);
        for (std::size_t k = 1; k < n; ++k) v[k] = Polynomial::variable(n, k - 1) - Polynomial::variable(n, k);
        v[5] = Polynomial::variable(n, n - 1);
        const auto& u = cube_to_ordered_simplex();
        std::array<Polynomial, 6> out;
        for (std::size_t k = 0; k < 6; ++k) out[k] = substitute(v[k], u);
        return out;
    }();
    return bary;
}

PullbackMap build_pullback(const LatticeSimplex6& sigma) {
    if (!sigma.nondegenerate()) throw std::domain_error("degenerate simplex " + sigma.id);
    PullbackMap map{sigma.id, {}};
    const auto& bary = cube_to_barycentric();
    for (std::size_t row = 0; row < kEdges; ++row) {
        Polynomial z(kCubeDim);
        for (std::size_t col = 0; col < 6; ++col) {
            const std::int64_t w = sigma.vertices[col][row];
            if (w != 0) z += Integer(static_cast<long>(w)) * bary[col];
        }
        map.coords[row] = z;
    }
    return map;
}

RationalEdgeList PullbackMap::apply(const std::array<Rational, kCubeDim>& x) const {
    RationalEdgeList out;
    for (std::size_t k = 0; k < kEdges; ++k) out[k] = coords[k].evaluate(std::span<const Rational>(x));
    return out;
}

Polynomial pullback(const Polynomial& p, const PullbackMap& map) {
    if (p.nvars() != kEdges) throw std::invalid_argument("pullback expects a 6-variable polynomial");
    return substitute(p, map.coords);
}

Polynomial pullback(const Polynomial& p, const LatticeSimplex6& sigma) { return pullback(p, build_pullback(sigma)); }

}  // namespace cmcert
