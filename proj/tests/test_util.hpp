#pragma once

#include <random>
#include <vector>

#include "fcc/poly.hpp"
#include "fcc/ratexpr.hpp"

namespace fcc::testutil {

// Deterministic random polynomial with small integer coefficients.
inline Polynomial random_poly(std::mt19937& rng, const RingPtr& ring, int max_degree,
                              int nterms = 6, bool zero_constant = false) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(zero_constant ? 1 : 0, max_degree);
    Polynomial p(ring);
    for (int t = 0; t < nterms; ++t) {
        int d = deg(rng);
        Monomial m(ring->nvars());
        for (int k = 0; k < d; ++k) {
            std::uniform_int_distribution<int> var(0, ring->ncoords() - 1);
            m.e[static_cast<size_t>(var(rng))] += 1;
        }
        int c = coeff(rng);
        if (c != 0) p.add_term(m, c);
    }
    return p;
}

inline std::vector<Rational> random_point(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> v(1, 9);
    std::uniform_int_distribution<int> s(0, 1);
    std::vector<Rational> pt;
    for (int i = 0; i < n; ++i) pt.push_back(Rational((s(rng) ? 1 : -1) * v(rng)));
    return pt;
}

}  // namespace fcc::testutil
