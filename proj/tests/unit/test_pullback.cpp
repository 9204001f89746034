#include <doctest.h>

#include "cmcert/cayley_menger.hpp"
#include "cmcert/pullback.hpp"
#include "helpers.hpp"

using namespace cmcert;

namespace {

std::array<Rational, kCubeDim> random_cube_point(Rng& rng) {
    std::array<Rational, kCubeDim> x;
    for (auto& xi : x) {
        xi = Rational(static_cast<long>(rng.uniform_int(0, 97)));
        xi /= 97;
    }
    return x;
}

// Z(x) written out directly: prefix products, consecutive differences,
// then the vertex matrix.
RationalEdgeList direct_map(const LatticeSimplex6& s, const std::array<Rational, kCubeDim>& x) {
    std::array<Rational, kCubeDim> u;
    Rational run = 1;
    for (std::size_t i = 0; i < kCubeDim; ++i) u[i] = run *= x[i];
    std::array<Rational, 6> w;
    w[0] = 1 - u[0];
    for (std::size_t i = 1; i < kCubeDim; ++i) w[i] = u[i - 1] - u[i];
    w[5] = u[4];
    RationalEdgeList out;
    for (auto& o : out) o = 0;
    for (std::size_t k = 0; k < 6; ++k)
        for (std::size_t e = 0; e < kEdges; ++e) out[e] += w[k] * static_cast<long>(s.vertices[k][e]);
    return out;
}

}  // namespace

TEST_CASE("the cube maps onto barycentric weights") {
    const auto& bary = cube_to_barycentric();
    Polynomial sum(kCubeDim);
    for (const auto& b : bary) sum += b;
    CHECK(sum == Polynomial::constant(kCubeDim, 1));
    const auto& u = cube_to_ordered_simplex();
    CHECK(u[4].total_degree() == 5);
}

TEST_CASE("the pullback map agrees with a direct computation") {
    Rng rng(41);
    for (const char* id : {"C_11", "D_1111", "A_2", "B_3", "D_3422"}) {
        const auto& s = simplex_by_id(id);
        PullbackMap map = build_pullback(s);
        for (int trial = 0; trial < 20; ++trial) {
            auto x = random_cube_point(rng);
            auto z = map.apply(x);
            CHECK(z == direct_map(s, x));
            CHECK(s.contains(z));
        }
    }
}

TEST_CASE("cube corners on the staircase land on vertices") {
    const auto& s = simplex_by_id("C_11");
    PullbackMap map = build_pullback(s);
    for (std::size_t k = 0; k <= kCubeDim; ++k) {
        std::array<Rational, kCubeDim> x;
        for (std::size_t i = 0; i < kCubeDim; ++i) x[i] = i < k ? 1 : 0;
        CHECK(map.apply(x) == to_rational(s.vertices[k]));
    }
}

TEST_CASE("pullback of f evaluates as f o Z") {
    Rng rng(42);
    const auto& s = simplex_by_id("C_11");
    PullbackMap map = build_pullback(s);
    for (const auto* poly : {&cm_f(), static_cast<const Polynomial*>(nullptr)}) {
        Polynomial p = poly ? *poly : combination(EdgeSubset::full(), 2, -3);
        Polynomial pz = pullback(p, map);
        CHECK(pz.nvars() == kCubeDim);
        CHECK(pz == pullback(p, s));
        for (int trial = 0; trial < 10; ++trial) {
            auto x = random_cube_point(rng);
            CHECK(pz.evaluate(std::span<const Rational>(x)) == p.evaluate(std::span<const Rational>(map.apply(x))));
        }
        // every variable stays within the certifier's degree cap
        for (auto e : pz.degree_envelope()) CHECK(e <= 6);
    }
}

TEST_CASE("degenerate simplices are rejected") {
    LatticeSimplex6 flat{"flat", {}};
    for (auto& v : flat.vertices) v = center_point();
    CHECK_FALSE(flat.nondegenerate());
    CHECK_THROWS_AS(build_pullback(flat), std::domain_error);
}
