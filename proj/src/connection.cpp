#include "fcc/connection.hpp"

#include <stdexcept>

namespace fcc {

namespace {

// Components of X = E - a0 e per block: X^{p(b)} = u^{p(b)} - [p=1] a0,
// with the out-of-range convention X^{p(b)} = 0 for p < 1 or p > m_b.
class XField {
public:
    XField(const JordanSpec& spec, const Polynomial& a0, const RingPtr& ring)
        : spec_(spec), ring_(ring), a0_(a0) {}

    Polynomial comp(int b, int p) const {
        if (p < 1 || p > spec_.size(b)) return Polynomial(ring_);
        Polynomial x = Polynomial::variable(ring_, spec_.flat(b, p));
        if (p == 1) x -= a0_;
        return x;
    }
    // d_{j(c)} X^{p(b)}
    Polynomial dcomp(int c, int j, int b, int p) const {
        if (p < 1 || p > spec_.size(b)) return Polynomial(ring_);
        Polynomial d(ring_);
        if (c == b && j == p) d += Polynomial::constant(ring_, 1);
        if (p == 1) d -= a0_.partial(spec_.flat(c, j));
        return d;
    }

private:
    const JordanSpec& spec_;
    RingPtr ring_;
    Polynomial a0_;
};

}  // namespace

Connection solve_connection(const JordanSpec& spec, const Polynomial& a0, const RingPtr& ring) {
    int n = spec.n();
    int r = spec.nblocks();
    Connection G(n, ring);
    XField X(spec, a0, ring);

    auto set_sym = [&](int I, int J, int K, const RatExpr& v) {
        G.at(I, J, K) = v;
        G.at(I, K, J) = v;
    };

    for (int a = 0; a < r; ++a) {
        // Eigenvalue differences X^{1(a)} - X^{1(b)} = u^{1(a)} - u^{1(b)}.
        for (int i = 1; i <= spec.size(a); ++i) {
            int I = spec.flat(a, i);

            // Case a: symbols with three pairwise-distinct blocks vanish
            // (nothing to do: G is zero-initialized).

            // Case b: G^{i(a)}_{j(b) k(a)} for every b != a, by descending
            // recursion in k, then j, dividing by X^{1(a)} - X^{1(b)}.
            for (int b = 0; b < r; ++b) {
                if (b == a) continue;
                Polynomial diff = Polynomial::variable(ring, spec.flat(a, 1)) -
                                  Polynomial::variable(ring, spec.flat(b, 1));
                for (int k = spec.size(a); k >= 1; --k) {
                    for (int j = spec.size(b); j >= 1; --j) {
                        RatExpr acc(X.dcomp(b, j, a, i - k + 1));
                        for (int s = k + 1; s <= spec.size(a); ++s)
                            acc += G.at(I, spec.flat(b, j), spec.flat(a, s)) *
                                   RatExpr(X.comp(a, s - k + 1));
                        for (int s = j + 1; s <= spec.size(b); ++s)
                            acc -= G.at(I, spec.flat(a, k), spec.flat(b, s)) *
                                   RatExpr(X.comp(b, s - j + 1));
                        set_sym(I, spec.flat(b, j), spec.flat(a, k),
                                -(acc / RatExpr(diff)));
                    }
                }
            }

            // Flat-unit closure: symbols with a lower index 1 within a single
            // block, determined by sum_sigma G^{i(a)}_{1(sigma) j(b)} = 0.
            for (int b = 0; b < r; ++b) {
                for (int j = 1; j <= spec.size(b); ++j) {
                    RatExpr acc = RatExpr::constant(ring, 0);
                    if (b != a) {
                        acc = -G.at(I, spec.flat(b, j), spec.flat(a, 1));
                    } else {
                        for (int s2 = 0; s2 < r; ++s2) {
                            if (s2 == a) continue;
                            acc -= G.at(I, spec.flat(a, j), spec.flat(s2, 1));
                        }
                    }
                    set_sym(I, spec.flat(b, j), spec.flat(b, 1), acc);
                }
            }

            // Cases d (b == a) and c (b != a): both lower indices in block b
            // with inner indices >= 2, descending in k then j, dividing by
            // X^{2(b)} = u^{2(b)}.
            for (int b = 0; b < r; ++b) {
                int m = spec.size(b);
                if (m < 2) continue;
                RatExpr X2(Polynomial::variable(ring, spec.flat(b, 2)));
                for (int k = m; k >= 2; --k) {
                    for (int j = k; j >= 2; --j) {
                        RatExpr acc = RatExpr::constant(ring, 0);
                        if (b == a) {
                            acc += RatExpr(X.dcomp(a, j - 1, a, i - k + 1));
                            acc -= RatExpr(X.dcomp(a, k, a, i - j + 2));
                        }
                        for (int s = k + 1; s <= m; ++s)
                            acc += G.at(I, spec.flat(b, j - 1), spec.flat(b, s)) *
                                   RatExpr(X.comp(b, s - k + 1));
                        for (int s = j + 1; s <= m; ++s)
                            acc -= G.at(I, spec.flat(b, k), spec.flat(b, s)) *
                                   RatExpr(X.comp(b, s - j + 2));
                        set_sym(I, spec.flat(b, k), spec.flat(b, j), acc / X2);
                    }
                }
            }
        }
    }
    return G;
}

ThreeTensor d_nabla(const OneOneTensor& V, const Connection& G) {
    int n = V.dim();
    if (G.dim() != n) throw std::invalid_argument("d_nabla: dimension mismatch");
    const RingPtr& ring = V.at(0, 0).ring();
    ThreeTensor R(n, ring);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) {
                RatExpr acc = V.at(k, j).partial(i) - V.at(k, i).partial(j);
                for (int s = 0; s < n; ++s)
                    acc += G.at(k, i, s) * V.at(s, j) - G.at(k, j, s) * V.at(s, i);
                R.at(k, i, j) = acc;
                R.at(k, j, i) = -acc;
            }
    return R;
}

ConnectionReport verify_connection(const JordanSpec& spec, const Polynomial& a0,
                                   const Connection& G, const RingPtr& ring) {
    int n = spec.n();
    ConnectionReport rep;

    rep.torsionless = true;
    for (int i = 0; i < n && rep.torsionless; ++i)
        for (int j = 0; j < n && rep.torsionless; ++j)
            for (int k = 0; k < j; ++k)
                if (G.at(i, j, k) != G.at(i, k, j)) {
                    rep.torsionless = false;
                    break;
                }

    rep.flat_unit = true;
    for (int i = 0; i < n && rep.flat_unit; ++i)
        for (int j = 0; j < n; ++j) {
            RatExpr acc = RatExpr::constant(ring, 0);
            for (int b = 0; b < spec.nblocks(); ++b) acc += G.at(i, spec.flat(b, 1), j);
            if (!acc.is_zero()) {
                rep.flat_unit = false;
                break;
            }
        }

    auto S = canonical_structure(spec, ring);
    VectorField Xf = S.E;
    RatExpr a0e{RatExpr(a0)};
    for (int i = 0; i < n; ++i) Xf[i] -= a0e * S.e[i];
    rep.dnabla_zero = d_nabla(mult_operator(Xf, S.c), G).is_zero();
    return rep;
}

std::vector<std::array<int, 4>> nabla_c_symmetry_violations(const JordanSpec& spec,
                                                            const Connection& G,
                                                            const RingPtr& ring) {
    int n = spec.n();
    CTensor c(spec);
    std::vector<std::array<int, 4>> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < j; ++k)
                for (int s = 0; s < n; ++s) {
                    // nabla_j c^i_{ks} - nabla_k c^i_{js}; the torsion terms
                    // G^l_{jk} cancel between the two covariant derivatives.
                    RatExpr acc = RatExpr::constant(ring, 0);
                    for (int l = 0; l < n; ++l) {
                        if (c.value(l, k, s)) acc += G.at(i, j, l);
                        if (c.value(i, l, s)) acc -= G.at(l, j, k);
                        if (c.value(i, k, l)) acc -= G.at(l, j, s);
                        if (c.value(l, j, s)) acc -= G.at(i, k, l);
                        if (c.value(i, l, s)) acc += G.at(l, k, j);
                        if (c.value(i, j, l)) acc += G.at(l, k, s);
                    }
                    if (!acc.is_zero()) out.push_back({i, j, k, s});
                }
    return out;
}

}  // namespace fcc
