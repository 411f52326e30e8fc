#pragma once

#include <array>
#include <vector>

#include "fcc/connection.hpp"
#include "fcc/tensors.hpp"

namespace fcc {

// R^k_{lij} = d_j G^k_{il} - d_i G^k_{jl} + G^k_{js} G^s_{il} - G^k_{is} G^s_{jl},
// antisymmetric in (i, j).
class RiemannTensor {
public:
    RiemannTensor() = default;
    RiemannTensor(int n, const RingPtr& ring)
        : n_(n), comp_(static_cast<size_t>(n * n * n * n), RatExpr::constant(ring, 0)) {}

    int dim() const { return n_; }
    const RatExpr& at(int k, int l, int i, int j) const {
        return comp_[static_cast<size_t>(((k * n_ + l) * n_ + i) * n_ + j)];
    }
    RatExpr& at(int k, int l, int i, int j) {
        return comp_[static_cast<size_t>(((k * n_ + l) * n_ + i) * n_ + j)];
    }
    bool is_zero() const {
        for (const auto& v : comp_)
            if (!v.is_zero()) return false;
        return true;
    }

private:
    int n_ = 0;
    std::vector<RatExpr> comp_;
};

RiemannTensor riemann(const Connection& G, const RingPtr& ring);

bool is_flat(const RiemannTensor& R);

// Cyclic contraction R^j_{skl} c^s_{mi} + R^j_{smk} c^s_{li} + R^j_{slm} c^s_{ki} = 0;
// returns violating tuples (j, m, l, k, i).
std::vector<std::array<int, 5>> check_3RC(const RiemannTensor& R, const CTensor& c,
                                          const RingPtr& ring);

// e(G^i_{jk}) = sum over blocks of d_{1(sigma)} G^i_{jk}.
ThreeTensor e_flatness_residual(const Connection& G, const JordanSpec& spec);

// Symmetric metric; entries are rational expressions over the ring.
class Metric {
public:
    Metric() = default;
    Metric(int n, const RingPtr& ring)
        : n_(n), g_(static_cast<size_t>(n * n), RatExpr::constant(ring, 0)) {}

    int dim() const { return n_; }
    const RatExpr& at(int i, int j) const { return g_[static_cast<size_t>(i * n_ + j)]; }
    RatExpr& at(int i, int j) { return g_[static_cast<size_t>(i * n_ + j)]; }
    void set_sym(int i, int j, const RatExpr& v) {
        at(i, j) = v;
        at(j, i) = v;
    }
    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < i; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

private:
    int n_ = 0;
    std::vector<RatExpr> g_;
};

// Dual product and connection: c*^i_{jk} = (L^{-1})^i_m c^m_{jk} and
// G*^k_{ij} = G^k_{ij} - c*^l_{ji} (nabla E)^k_l with
// (nabla E)^k_l = delta^k_l + G^k_{ls} E^s.
struct DualStructure {
    ThreeTensor cstar;
    Connection gamma_star;
};
DualStructure dual_structure(const JordanSpec& spec, const Connection& G, const RingPtr& ring);

struct MetricReport {
    bool invariant = false;
    bool killing = false;
    bool bridge = false;
    bool all() const { return invariant && killing && bridge; }
};
// invariance g_{il} c^l_{jk} = g_{jl} c^l_{ik}; Killing e(g_{ij}) = 0; bridge
// d_k g_{ij} - G^s_{ik} g_{sj} - G^s_{jk} g_{si}
//   = (1/2) e^m c^s_{ik} (d_s g_{mj} - d_j g_{ms})
//   + (1/2) e^m c^s_{jk} (d_s g_{mi} - d_i g_{ms}).
MetricReport metric_checks(const JordanSpec& spec, const Metric& g, const Connection& G,
                           const RingPtr& ring);

}  // namespace fcc
