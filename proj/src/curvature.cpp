#include "fcc/curvature.hpp"

#include <stdexcept>

namespace fcc {

RiemannTensor riemann(const Connection& G, const RingPtr& ring) {
    int n = G.dim();
    RiemannTensor R(n, ring);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < i; ++j) {
                    RatExpr acc = G.at(k, i, l).partial(j) - G.at(k, j, l).partial(i);
                    for (int s = 0; s < n; ++s)
                        acc += G.at(k, j, s) * G.at(s, i, l) -
                               G.at(k, i, s) * G.at(s, j, l);
                    R.at(k, l, i, j) = acc;
                    R.at(k, l, j, i) = -acc;
                }
    return R;
}

bool is_flat(const RiemannTensor& R) { return R.is_zero(); }

std::vector<std::array<int, 5>> check_3RC(const RiemannTensor& R, const CTensor& c,
                                          const RingPtr& ring) {
    int n = R.dim();
    std::vector<std::array<int, 5>> out;
    for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m)
            for (int l = 0; l < n; ++l)
                for (int k = 0; k < n; ++k)
                    for (int i = 0; i < n; ++i) {
                        RatExpr acc = RatExpr::constant(ring, 0);
                        for (int s = 0; s < n; ++s) {
                            if (c.value(s, m, i)) acc += R.at(j, s, k, l);
                            if (c.value(s, l, i)) acc += R.at(j, s, m, k);
                            if (c.value(s, k, i)) acc += R.at(j, s, l, m);
                        }
                        if (!acc.is_zero()) out.push_back({j, m, l, k, i});
                    }
    return out;
}

ThreeTensor e_flatness_residual(const Connection& G, const JordanSpec& spec) {
    int n = G.dim();
    const RingPtr& ring = G.at(0, 0, 0).ring();
    ThreeTensor R(n, ring);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                RatExpr acc = RatExpr::constant(ring, 0);
                for (int b = 0; b < spec.nblocks(); ++b)
                    acc += G.at(i, j, k).partial(spec.flat(b, 1));
                R.at(i, j, k) = acc;
            }
    return R;
}

DualStructure dual_structure(const JordanSpec& spec, const Connection& G, const RingPtr& ring) {
    int n = spec.n();
    auto S = canonical_structure(spec, ring);
    OneOneTensor Linv = invert(S.L);

    ThreeTensor cstar(n, ring);
    CTensor c(spec);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                RatExpr acc = RatExpr::constant(ring, 0);
                for (int m = 0; m < n; ++m)
                    if (c.value(m, j, k)) acc += Linv.at(i, m);
                cstar.at(i, j, k) = acc;
            }

    // (nabla E)^k_l = delta^k_l + G^k_{ls} E^s
    OneOneTensor nablaE = OneOneTensor::identity(n, ring);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int s = 0; s < n; ++s) nablaE.at(k, l) += G.at(k, l, s) * S.E[s];

    Connection Gs(n, ring);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                RatExpr acc = G.at(k, i, j);
                for (int l = 0; l < n; ++l) acc -= cstar.at(l, j, i) * nablaE.at(k, l);
                Gs.at(k, i, j) = acc;
            }
    return {std::move(cstar), std::move(Gs)};
}

MetricReport metric_checks(const JordanSpec& spec, const Metric& g, const Connection& G,
                           const RingPtr& ring) {
    int n = spec.n();
    if (g.dim() != n || G.dim() != n)
        throw std::invalid_argument("metric_checks: dimension mismatch");
    CTensor c(spec);
    MetricReport rep;

    rep.invariant = true;
    for (int i = 0; i < n && rep.invariant; ++i)
        for (int j = 0; j < i && rep.invariant; ++j)
            for (int k = 0; k < n; ++k) {
                RatExpr acc = RatExpr::constant(ring, 0);
                for (int l = 0; l < n; ++l) {
                    if (c.value(l, j, k)) acc += g.at(i, l);
                    if (c.value(l, i, k)) acc -= g.at(j, l);
                }
                if (!acc.is_zero()) {
                    rep.invariant = false;
                    break;
                }
            }

    rep.killing = true;
    for (int i = 0; i < n && rep.killing; ++i)
        for (int j = i; j < n; ++j) {
            RatExpr acc = RatExpr::constant(ring, 0);
            for (int b = 0; b < spec.nblocks(); ++b)
                acc += g.at(i, j).partial(spec.flat(b, 1));
            if (!acc.is_zero()) {
                rep.killing = false;
                break;
            }
        }

    // e^m is 1 at the first coordinate of each block.
    std::vector<bool> is_unit(static_cast<size_t>(n), false);
    for (int b = 0; b < spec.nblocks(); ++b) is_unit[static_cast<size_t>(spec.flat(b, 1))] = true;
    RatExpr half = RatExpr::constant(ring, Rational(1, 2));

    rep.bridge = true;
    for (int k = 0; k < n && rep.bridge; ++k)
        for (int i = 0; i < n && rep.bridge; ++i)
            for (int j = i; j < n; ++j) {
                RatExpr lhs = g.at(i, j).partial(k);
                for (int s = 0; s < n; ++s)
                    lhs -= G.at(s, i, k) * g.at(s, j) + G.at(s, j, k) * g.at(s, i);
                RatExpr rhs = RatExpr::constant(ring, 0);
                for (int m = 0; m < n; ++m) {
                    if (!is_unit[static_cast<size_t>(m)]) continue;
                    for (int s = 0; s < n; ++s) {
                        if (c.value(s, i, k))
                            rhs += half * (g.at(m, j).partial(s) - g.at(m, s).partial(j));
                        if (c.value(s, j, k))
                            rhs += half * (g.at(m, i).partial(s) - g.at(m, s).partial(i));
                    }
                }
                if (lhs != rhs) {
                    rep.bridge = false;
                    break;
                }
            }
    return rep;
}

}  // namespace fcc
