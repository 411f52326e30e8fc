#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fcc/poly.hpp"

namespace fcc {

// Polynomial 1-form w = w_i du^i over the coordinates of a ring.
struct OneForm {
    std::vector<Polynomial> components;

    int dim() const { return static_cast<int>(components.size()); }
};

struct ClosednessError : std::runtime_error {
    int i, j;  // 1-based offending pair: d_j w_i != d_i w_j
    ClosednessError(int i_, int j_)
        : std::runtime_error("1-form is not closed: d" + std::to_string(j_) + " w" +
                             std::to_string(i_) + " != d" + std::to_string(i_) + " w" +
                             std::to_string(j_)),
          i(i_), j(j_) {}
};

// Gradient of a function as a 1-form: (df)_i = d_i f.
inline OneForm d_function(const Polynomial& f) {
    OneForm w;
    for (int i = 0; i < f.ring()->ncoords(); ++i) w.components.push_back(f.partial(i));
    return w;
}

// Recovers f with f(0) = 0 and d_i f = w_i by integrating along rays from the
// origin: a term c*u^a of w_i contributes c*u^a*u^i / (|a|+1). Requires a
// closed form over a pure coordinate ring.
inline Polynomial integrate_radial(const OneForm& w) {
    if (w.dim() == 0) throw std::invalid_argument("integrate_radial: empty 1-form");
    const RingPtr& ring = w.components[0].ring();
    if (!ring->pure())
        throw std::invalid_argument("integrate_radial: ring has non-coordinate symbols");
    if (w.dim() != ring->ncoords())
        throw std::invalid_argument("integrate_radial: component count mismatch");

    for (int i = 0; i < w.dim(); ++i) {
        for (int j = i + 1; j < w.dim(); ++j) {
            if (w.components[i].partial(j) != w.components[j].partial(i))
                throw ClosednessError(i + 1, j + 1);
        }
    }

    Polynomial f(ring);
    for (int i = 0; i < w.dim(); ++i) {
        for (const auto& [m, c] : w.components[i].terms()) {
            Monomial mm = m;
            mm.e[static_cast<size_t>(i)] += 1;
            f.add_term(mm, c / Rational(m.degree() + 1));
        }
    }
    return f;
}

}  // namespace fcc
