#include <doctest.h>

#include <sstream>

#include "cmcert/poly.hpp"
#include "helpers.hpp"

using namespace cmcert;

TEST_CASE("zero coefficients are never stored") {
    Polynomial p(2);
    p.add_term({1, 0}, 3);
    p.add_term({1, 0}, -3);
    CHECK(p.is_zero());
    CHECK(p.total_degree() == -1);
}

TEST_CASE("ring operations agree with pointwise evaluation") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 6));
        Polynomial p = testing::random_poly(rng, n, 8, 3, 20);
        Polynomial q = testing::random_poly(rng, n, 8, 3, 20);
        auto x = testing::random_point(rng, n, 9);
        Integer px = p.evaluate(x), qx = q.evaluate(x);
        CHECK((p + q).evaluate(x) == px + qx);
        CHECK((p - q).evaluate(x) == px - qx);
        CHECK((p * q).evaluate(x) == px * qx);
        CHECK((-p).evaluate(x) == -px);
        CHECK((Integer(7) * p).evaluate(x) == 7 * px);
        CHECK(p.pow(3).evaluate(x) == px * px * px);
        auto r = testing::random_rational_point(rng, n);
        CHECK((p * q).evaluate(std::span<const Rational>(r)) ==
              p.evaluate(std::span<const Rational>(r)) * q.evaluate(std::span<const Rational>(r)));
    }
}

TEST_CASE("commutativity and distributivity hold structurally") {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial a = testing::random_poly(rng, 4, 6, 2, 9);
        Polynomial b = testing::random_poly(rng, 4, 6, 2, 9);
        Polynomial c = testing::random_poly(rng, 4, 6, 2, 9);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(add(a, b) == a + b);
        CHECK(mul(a, b) == a * b);
    }
}

TEST_CASE("text serialization round trips") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 6));
        Polynomial p = testing::random_poly(rng, n, 10, 6, 1000000);
        p.add_term({}, Integer("123456789012345678901234567890"));
        std::string s = serialize_polynomial(p);
        CHECK(parse_polynomial(s) == p);
        CHECK(serialize_polynomial(parse_polynomial(s)) == s);
    }
}

TEST_CASE("parser accepts comments and rejects ragged rows") {
    Polynomial p = parse_polynomial("# header\n3 1 0\n\n-2 0 2  # trailing\n");
    CHECK(p.nvars() == 2);
    CHECK(p.coeff({1, 0}) == 3);
    CHECK(p.coeff({0, 2}) == -2);
    CHECK_THROWS(parse_polynomial("1 1 0\n2 1\n"));
    CHECK_THROWS(parse_polynomial("x 1 0\n"));
}

TEST_CASE("derivative satisfies Euler's identity on homogeneous input") {
    Rng rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 4;
        Polynomial h(n);
        for (int k = 0; k < 8; ++k) {
            Exponents e{};
            int left = 5;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                int take = static_cast<int>(rng.uniform_int(0, left));
                e[i] = static_cast<std::uint8_t>(take);
                left -= take;
            }
            e[n - 1] = static_cast<std::uint8_t>(left);
            h.add_term(e, Integer(static_cast<long>(rng.uniform_int(-30, 30))));
        }
        if (h.is_zero()) continue;
        REQUIRE(h.is_homogeneous(5));
        Polynomial euler(n);
        for (std::size_t i = 0; i < n; ++i) euler += Polynomial::variable(n, i) * partial_derivative(h, i);
        CHECK(euler == Integer(5) * h);
    }
}

TEST_CASE("derivative obeys the product rule") {
    Rng rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = testing::random_poly(rng, 3, 5, 3, 9);
        Polynomial q = testing::random_poly(rng, 3, 5, 3, 9);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(partial_derivative(p * q, i) == partial_derivative(p, i) * q + p * partial_derivative(q, i));
    }
}

TEST_CASE("substitution commutes with evaluation") {
    Rng rng(16);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = testing::random_poly(rng, 3, 6, 3, 9);
        std::vector<Polynomial> images;
        for (int i = 0; i < 3; ++i) images.push_back(testing::random_poly(rng, 2, 3, 2, 5));
        Polynomial composed = substitute(p, images);
        auto x = testing::random_point(rng, 2, 6);
        std::vector<Integer> y;
        for (auto& img : images) y.push_back(img.evaluate(x));
        CHECK(composed.evaluate(x) == p.evaluate(y));
    }
}

TEST_CASE("curve restriction matches evaluation along the curve") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = testing::random_poly(rng, 3, 6, 3, 9);
        std::vector<UnivariatePoly> curve;
        for (int i = 0; i < 3; ++i)
            curve.emplace_back(std::vector<Integer>{rng.uniform_int(-4, 4), rng.uniform_int(-4, 4), rng.uniform_int(-4, 4)});
        UnivariatePoly r = restrict_curve(p, curve);
        for (long t = -3; t <= 3; ++t) {
            std::vector<Integer> x;
            for (auto& c : curve) x.push_back(c.evaluate(Integer(t)));
            CHECK(r.evaluate(Integer(t)) == p.evaluate(x));
        }
    }
}

TEST_CASE("univariate helpers") {
    UnivariatePoly u({0, 0, -5, 0, 2});
    CHECK(u.degree() == 4);
    CHECK(u.lowest_degree() == 2);
    CHECK(u.evaluate(Integer(2)) == -20 + 32);
    CHECK(UnivariatePoly({1, 1}) * UnivariatePoly({-1, 1}) == UnivariatePoly({-1, 0, 1}));
    CHECK(UnivariatePoly({3, 0, 0}).degree() == 0);
    CHECK(UnivariatePoly().lowest_degree() == -1);
}

TEST_CASE("bad shapes throw") {
    CHECK_THROWS_AS(Polynomial(0), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial(7), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial(2) + Polynomial(3), std::invalid_argument);
    std::vector<Integer> x{1};
    CHECK_THROWS_AS(Polynomial(2).evaluate(x), std::invalid_argument);
}
