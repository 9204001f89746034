#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "cmcert/cayley_menger.hpp"
#include "cmcert/random.hpp"

using namespace cmcert;

namespace {

// Leibniz expansion of the bordered 5x5 matrix of squared distances.
Integer leibniz_f(const EdgeList& d) {
    std::array<std::array<Integer, 5>, 5> m{};
    for (int i = 1; i < 5; ++i) m[0][i] = m[i][0] = 1;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            Integer sq = d[edge_index(i, j)] * d[edge_index(i, j)];
            m[i][j] = m[j][i] = sq;
        }
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    Integer det = 0;
    do {
        int inversions = 0;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                if (perm[a] > perm[b]) ++inversions;
        Integer term = inversions % 2 ? -1 : 1;
        for (int r = 0; r < 5 && term != 0; ++r) term *= m[r][perm[r]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Gram matrix of the edge vectors at vertex 1; a list is realizable as a
// nondegenerate tetrahedron iff it is positive definite (Sylvester).
bool gram_positive_definite(const EdgeList& d) {
    auto sq = [&](int i, int j) { return Rational(d[edge_index(i, j)] * d[edge_index(i, j)]); };
    std::array<std::array<Rational, 3>, 3> g;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            int i = a + 2, j = b + 2;
            g[a][b] = (i == j) ? sq(1, i) : (sq(1, i) + sq(1, j) - sq(i, j)) / 2;
        }
    Rational m1 = g[0][0];
    Rational m2 = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    Rational m3 = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                  g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    return m1 > 0 && m2 > 0 && m3 > 0;
}

EdgeList list(std::initializer_list<long> v) {
    EdgeList d;
    std::size_t k = 0;
    for (long x : v) d[k++] = x;
    return d;
}

EdgeList random_list(Rng& rng, long lo, long hi) {
    EdgeList d;
    for (auto& x : d) x = static_cast<long>(rng.uniform_int(lo, hi));
    return d;
}

Integer eval(const Polynomial& p, const EdgeList& d) { return p.evaluate(std::span<const Integer>(d)); }

}  // namespace

TEST_CASE("edge slots follow (12,13,14,23,24,34)") {
    CHECK(edge_index(1, 2) == 0);
    CHECK(edge_index(3, 1) == 1);
    CHECK(edge_index(1, 4) == 2);
    CHECK(edge_index(2, 3) == 3);
    CHECK(edge_index(4, 2) == 4);
    CHECK(edge_index(3, 4) == 5);
    for (std::size_t k = 0; k < kEdges; ++k) CHECK(edge_index(edge_at(k).i, edge_at(k).j) == k);
}

TEST_CASE("f has the expected shape") {
    const Polynomial& f = cm_f();
    CHECK(f.nvars() == 6);
    CHECK(f.is_homogeneous(6));
    CHECK(cm_f_on_squares().is_homogeneous(3));
    CHECK(build_f_by_cofactors() == f);
    CHECK(build_f() == f);
    CHECK(build_f_on_squares() == cm_f_on_squares());
}

TEST_CASE("f agrees with an independent Leibniz determinant") {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        EdgeList d = random_list(rng, 0, 30);
        Integer want = leibniz_f(d);
        CHECK(eval(cm_f(), d) == want);
        CHECK(cm_determinant_value(d) == want);
        EdgeList sq;
        for (std::size_t k = 0; k < kEdges; ++k) sq[k] = d[k] * d[k];
        CHECK(eval(cm_f_on_squares(), sq) == want);
    }
}

TEST_CASE("f is 288 times the squared volume of integer tetrahedra") {
    Rng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        std::array<std::array<long, 3>, 4> v;
        for (auto& p : v)
            for (auto& c : p) c = static_cast<long>(rng.uniform_int(-10, 10));
        EdgeList sq;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                long s = 0;
                for (int c = 0; c < 3; ++c) s += (v[i][c] - v[j][c]) * (v[i][c] - v[j][c]);
                sq[edge_index(i + 1, j + 1)] = s;
            }
        auto e = [&](int i, int c) { return v[i][c] - v[0][c]; };
        long det = e(1, 0) * (e(2, 1) * e(3, 2) - e(2, 2) * e(3, 1)) - e(1, 1) * (e(2, 0) * e(3, 2) - e(2, 2) * e(3, 0)) +
                   e(1, 2) * (e(2, 0) * e(3, 1) - e(2, 1) * e(3, 0));
        // 288 (det/6)^2 = 8 det^2
        CHECK(eval(cm_f_on_squares(), sq) == Integer(8) * det * det);
    }
}

TEST_CASE("headline evaluations") {
    EdgeList c = list({4, 4, 4, 4, 4, 4});
    EdgeList a23 = list({6, 3, 3, 3, 3, 6});
    CHECK(eval(cm_f(), c) == 16384);
    CHECK(eval(directional_derivative(EdgeSubset::full()), c) == 24576);
    CHECK(eval(cm_f(), a23) == -93312);
    CHECK(eval(directional_derivative(EdgeSubset::full()), a23) == -62208);
    // Euler: sum_e d_e df/dd_e = 6 f, so at a constant list g_K4 = 6 f / d.
    CHECK(eval(directional_derivative(EdgeSubset::full()), c) * 4 == 6 * eval(cm_f(), c));
    CHECK(eval(cm_f(), list({8, 8, 8, 8, 8, 8})) == Integer(1) << 20);
}

TEST_CASE("g is the sum of partials and is linear in the subset") {
    Rng rng(23);
    const auto& partials = cm_partials();
    for (std::uint8_t m = 1; m < 64; ++m) {
        EdgeSubset beta(m);
        Polynomial g = directional_derivative(beta);
        Polynomial sum(6);
        for (std::size_t k : beta.slots()) sum += partials[k];
        CHECK(g == sum);
        CHECK(combination(beta, 3, -2) == Integer(3) * g - Integer(2) * cm_f());
    }
    CHECK_THROWS_AS(directional_derivative(EdgeSubset()), std::invalid_argument);
}

TEST_CASE("g matches a finite difference of f along 1_beta") {
    // f(d + t 1_beta) is a sextic in t; its t-coefficient is g(d). Compare
    // with a 7-point exact interpolation built from Leibniz determinants.
    Rng rng(24);
    const std::array<long, 7> w{-147, 360, -450, 400, -225, 72, -10};
    for (int trial = 0; trial < 40; ++trial) {
        EdgeSubset beta(static_cast<std::uint8_t>(rng.uniform_int(1, 63)));
        EdgeList d = random_list(rng, 1, 20);
        Integer acc = 0;
        for (long t = 0; t <= 6; ++t) {
            EdgeList s = d;
            for (std::size_t k : beta.slots()) s[k] += t;
            acc += w[t] * leibniz_f(s);
        }
        REQUIRE(acc % 60 == 0);
        CHECK(eval(directional_derivative(beta), d) == acc / 60);
    }
}

TEST_CASE("relabeling vertices preserves f and transports g") {
    Rng rng(25);
    auto perms = VertexPermutation::all();
    CHECK(perms.size() == 24);
    CHECK(VertexPermutation::even().size() == 12);
    for (int trial = 0; trial < 20; ++trial) {
        EdgeList d = random_list(rng, 1, 25);
        EdgeSubset beta(static_cast<std::uint8_t>(rng.uniform_int(1, 63)));
        for (const auto& s : perms) {
            EdgeList e = relabel(s, d);
            CHECK(eval(cm_f(), e) == eval(cm_f(), d));
            CHECK(eval(directional_derivative(beta.relabeled(s)), e) == eval(directional_derivative(beta), d));
        }
    }
}

TEST_CASE("permutation algebra") {
    auto perms = VertexPermutation::all();
    for (const auto& a : perms) {
        CHECK(a * a.inverse() == VertexPermutation());
        for (const auto& b : perms) {
            CHECK((a * b).is_even() == (a.is_even() == b.is_even()));
            EdgeList d = list({1, 2, 3, 4, 5, 6});
            CHECK(relabel(a * b, d) == relabel(a, relabel(b, d)));
        }
    }
}

TEST_CASE("tetrahedrality agrees with the Gram oracle") {
    Rng rng(26);
    int positives = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        EdgeList d = random_list(rng, 1, 8);
        bool t = is_tetrahedral(d);
        CHECK(t == gram_positive_definite(d));
        positives += t;
    }
    CHECK(positives > 100);
    CHECK_FALSE(is_tetrahedral(list({2, 1, 1, 1, 1, 2})));
    CHECK(is_tetrahedral(list({1, 1, 1, 1, 1, 1})));
    // flat: four coplanar points with all triangle inequalities strict
    CHECK_FALSE(is_tetrahedral(list({3, 4, 5, 5, 4, 3})));
    CHECK_THROWS_AS(is_tetrahedral(list({0, 1, 1, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("volume and rational lists") {
    RationalEdgeList r;
    for (auto& x : r) x = Rational(1, 2);
    CHECK(is_tetrahedral(r));
    // regular edge 1/2: V^2 = (1/8)^2 / 72
    CHECK(volume_squared(r) == Rational(1, 64 * 72));
    EdgeList scaled = clear_denominators(r);
    for (auto& x : scaled) CHECK(x == scaled[0]);
}

TEST_CASE("Heron form") {
    CHECK(heron_squared_form(9, 16, 25) == 4 * 36 * 4);  // 3-4-5: 16 area^2 = 16*36
    CHECK(heron_squared_form(1, 4, 9) == 0);             // 1+2 = 3
    CHECK(heron_squared_form(1, 1, 16) < 0);
}

TEST_CASE("edge subset classification") {
    std::map<EdgeSubsetKind, int> count;
    int friendly = 0;
    for (std::uint8_t m = 0; m < 64; ++m) {
        EdgeSubset b(m);
        ++count[b.kind()];
        friendly += b.friendly();
        if (m) CHECK(EdgeSubset::parse(b.to_string()) == b);
    }
    CHECK(count[EdgeSubsetKind::SingleEdge] == 6);
    CHECK(count[EdgeSubsetKind::IncidentPair] == 12);
    CHECK(count[EdgeSubsetKind::OppositePair] == 3);
    CHECK(count[EdgeSubsetKind::Tripod] == 4);
    CHECK(count[EdgeSubsetKind::ThreeCycle] == 4);
    CHECK(count[EdgeSubsetKind::ThreePath] == 12);
    CHECK(count[EdgeSubsetKind::FourCycle] == 3);
    CHECK(count[EdgeSubsetKind::ComplementOfIncidentPair] == 12);
    CHECK(count[EdgeSubsetKind::ComplementOfEdge] == 6);
    CHECK(count[EdgeSubsetKind::FullK4] == 1);
    // unfriendly: complement is a single edge, an incident pair or a tripod
    CHECK(64 - friendly == 6 + 12 + 4);
    CHECK(EdgeSubset::parse("e12, e34") == EdgeSubset{{1, 2}, {3, 4}});
    CHECK(EdgeSubset::parse("K4") == EdgeSubset::full());
    CHECK_THROWS(EdgeSubset::parse("15"));
    CHECK_THROWS(EdgeSubset::parse(""));
    CHECK(stabilizer(EdgeSubset::full()).size() == 24);
    CHECK(stabilizer(EdgeSubset::parse("12")).size() == 4);
    CHECK(stabilizer(EdgeSubset::parse("12,13,23")).size() == 6);
}
