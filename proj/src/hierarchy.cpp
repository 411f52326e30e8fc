#include "fcc/hierarchy.hpp"

#include <stdexcept>

namespace fcc {

Polynomial next_a(const JordanSpec& spec, const Polynomial& a_k, const Polynomial& a0,
                  const OneOneTensor& L) {
    OneForm w = d_L_function(a_k, L);
    OneForm da0 = d_function(a0);
    for (int i = 0; i < spec.n(); ++i)
        w.components[static_cast<size_t>(i)] -= a_k * da0.components[static_cast<size_t>(i)];
    return integrate_radial(w);
}

OneOneTensor next_V(const OneOneTensor& V_k, const OneOneTensor& L, const Polynomial& a_k) {
    OneOneTensor r = V_k * L;
    RatExpr a(a_k);
    for (int i = 0; i < r.dim(); ++i) r.at(i, i) -= a;
    return r;
}

Hierarchy generate(const JordanSpec& spec, const A0& a0, int depth, const RingPtr& ring) {
    if (depth < 0) throw std::invalid_argument("generate: negative depth");
    auto S = canonical_structure(spec, ring);
    Hierarchy h{spec, {}, {}, {}};
    h.a.push_back(a0.value);
    h.V.push_back(OneOneTensor::identity(spec.n(), ring));
    h.X.push_back(S.e);
    for (int k = 0; k < depth; ++k) {
        h.a.push_back(next_a(spec, h.a.back(), a0.value, S.L));
        h.V.push_back(next_V(h.V[static_cast<size_t>(k)], S.L, h.a[static_cast<size_t>(k)]));
        h.X.push_back(h.V.back().apply(S.e));
    }
    return h;
}

std::vector<CommutationResidual> check_commutation(const OneOneTensor& A,
                                                   const OneOneTensor& B) {
    if (A.dim() != B.dim()) throw std::invalid_argument("check_commutation: dimension mismatch");
    int n = A.dim();
    const RingPtr& ring = A.at(0, 0).ring();
    std::vector<CommutationResidual> out;
    OneOneTensor bracket = A * B - B * A;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!bracket.at(i, j).is_zero())
                out.push_back({CommutationResidual::kBracket, i, j, 0, bracket.at(i, j)});
    // The derivative condition enters the flow commutator contracted with the
    // symmetric product u^j_x u^m_x, so only its (j,m)-symmetrization is
    // constrained.
    auto half = [&](int i, int j, int m) {
        RatExpr acc = RatExpr::constant(ring, 0);
        for (int s = 0; s < n; ++s) {
            acc += A.at(i, j).partial(s) * B.at(s, m);
            acc += A.at(i, s) * B.at(s, m).partial(j);
            acc -= B.at(i, j).partial(s) * A.at(s, m);
            acc -= B.at(i, s) * A.at(s, m).partial(j);
        }
        return acc;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int m = j; m < n; ++m) {
                RatExpr acc = half(i, j, m) + half(i, m, j);
                if (!acc.is_zero())
                    out.push_back({CommutationResidual::kDerivative, i, j, m, acc});
            }
    return out;
}

std::pair<RatExpr, RatExpr> independence_det(const Hierarchy& h, const RingPtr& ring) {
    int n = h.spec.n();
    if (static_cast<int>(h.X.size()) < n)
        throw std::invalid_argument("independence_det: depth K >= n-1 required");
    auto S = canonical_structure(h.spec, ring);
    std::vector<VectorField> xs(h.X.begin(), h.X.begin() + n);
    std::vector<VectorField> ps{S.e};
    VectorField p = S.e;
    for (int k = 1; k < n; ++k) {
        p = circ(p, S.E, S.c);
        ps.push_back(p);
    }
    return {det_columns(xs, ring), det_columns(ps, ring)};
}

}  // namespace fcc
