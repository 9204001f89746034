#pragma once

#include <vector>

#include "cmcert/poly.hpp"
#include "cmcert/random.hpp"

namespace testing {

inline cmcert::Polynomial random_poly(cmcert::Rng& rng, std::size_t nvars, int terms, int maxexp, long maxc) {
    cmcert::Polynomial p(nvars);
    for (int k = 0; k < terms; ++k) {
        cmcert::Exponents e{};
        for (std::size_t i = 0; i < nvars; ++i) e[i] = static_cast<std::uint8_t>(rng.uniform_int(0, maxexp));
        p.add_term(e, cmcert::Integer(static_cast<long>(rng.uniform_int(-maxc, maxc))));
    }
    return p;
}

inline std::vector<cmcert::Integer> random_point(cmcert::Rng& rng, std::size_t n, long bound) {
    std::vector<cmcert::Integer> x;
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(static_cast<long>(rng.uniform_int(-bound, bound)));
    return x;
}

inline std::vector<cmcert::Rational> random_rational_point(cmcert::Rng& rng, std::size_t n) {
    std::vector<cmcert::Rational> x;
    for (std::size_t i = 0; i < n; ++i) {
        cmcert::Rational q(static_cast<long>(rng.uniform_int(-50, 50)), static_cast<unsigned long>(rng.uniform_int(1, 17)));
        q.canonicalize();
        x.push_back(q);
    }
    return x;
}

}  // namespace testing
