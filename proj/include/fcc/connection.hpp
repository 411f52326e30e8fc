#pragma once

#include <array>
#include <vector>

#include "fcc/a0.hpp"
#include "fcc/tensors.hpp"

namespace fcc {

// Torsionless connection with flat unit; symbols stored dense, symmetric in
// the lower indices.
class Connection {
public:
    Connection() = default;
    Connection(int n, const RingPtr& ring)
        : n_(n), symbols_(static_cast<size_t>(n * n * n), RatExpr::constant(ring, 0)) {}

    int dim() const { return n_; }
    const RatExpr& at(int i, int j, int k) const {
        return symbols_[static_cast<size_t>((i * n_ + j) * n_ + k)];
    }
    RatExpr& at(int i, int j, int k) {
        return symbols_[static_cast<size_t>((i * n_ + j) * n_ + k)];
    }

private:
    int n_ = 0;
    std::vector<RatExpr> symbols_;
};

// The unique torsionless connection with flat unit satisfying
// d_nabla((E - a0 e) o) = 0, built by the recursive case analysis:
// case a (pairwise-distinct blocks: symbols vanish), case b (upper block
// matching one lower index, division by X^{1(a)} - X^{1(b)}), flat-unit
// closure for lower-index-1 symbols, cases d and c (both lower indices in one
// block, division by X^{2(b)} = u^{2(b)}).
Connection solve_connection(const JordanSpec& spec, const Polynomial& a0, const RingPtr& ring);

// (d_nabla V)^k_{ij} = d_i V^k_j - d_j V^k_i + G^k_{is} V^s_j - G^k_{js} V^s_i.
ThreeTensor d_nabla(const OneOneTensor& V, const Connection& G);

struct ConnectionReport {
    bool torsionless = false;
    bool flat_unit = false;
    bool dnabla_zero = false;
    bool all() const { return torsionless && flat_unit && dnabla_zero; }
};
ConnectionReport verify_connection(const JordanSpec& spec, const Polynomial& a0,
                                   const Connection& G, const RingPtr& ring);

// Violations of the covariant-derivative symmetry
// nabla_j c^i_{ks} = nabla_k c^i_{js} for the canonical structure constants,
// as index tuples (i, j, k, s).
std::vector<std::array<int, 4>> nabla_c_symmetry_violations(const JordanSpec& spec,
                                                            const Connection& G,
                                                            const RingPtr& ring);

}  // namespace fcc
