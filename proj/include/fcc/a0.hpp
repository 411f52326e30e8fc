#pragma once

#include <string>
#include <vector>

#include "fcc/jordan.hpp"
#include "fcc/poly.hpp"

namespace fcc {

// Per-block coefficient functions F_{a,1}..F_{a,m_a} of the general solution.
// Each F is a polynomial in the block's main variable u^{1(a)} (or a formal
// function symbol of it, for symbolic verification).
struct A0Family {
    std::vector<std::vector<Polynomial>> F;
};

struct A0 {
    Polynomial value;
    bool from_family = false;  // provenance: built by build_a0 vs supplied raw
};

// Single-block general solution of d d_L a0 = 0 on the coordinate window
// [coord_offset, coord_offset + m): the closed-form sum
//   a0 = F_m + sum_{s>=1} (1/s!) sum_{k_1..k_s in [2,m]}
//        u^{k_1}...u^{k_s} (d/du^1)^{s-1} F_{m+s-sum k_j},
// where F with index <= 0 vanish. Differentiation is with respect to the
// block's main coordinate, so F may be genuine univariate polynomials or
// formal function symbols with derivative chains.
Polynomial a0_single_block(const RingPtr& ring, int m, int coord_offset,
                           const std::vector<Polynomial>& F);

// Convenience wrapper for a stand-alone block of size n at offset 0.
Polynomial build_single_block(const RingPtr& ring, int n, const std::vector<Polynomial>& F);

// Multi-block general solution: sum over blocks of single-block solutions in
// each block's own coordinates (splitting lemma).
A0 build_a0(const JordanSpec& spec, const A0Family& fam, const RingPtr& ring);

// Master-equation residuals, one per unordered pair of flat coordinates:
//   sum_{s>i} u^{(s-i+1)(a)} d_{s(a)} d_{j(b)} f
// - sum_{s>j} u^{(s-j+1)(b)} d_{s(b)} d_{i(a)} f
// + (u^{1(a)} - u^{1(b)}) d_{i(a)} d_{j(b)} f = 0.
struct MasterResidual {
    int i, j;  // flat 0-based pair, i < j
    Polynomial value;
};
std::vector<MasterResidual> check_master(const JordanSpec& spec, const Polynomial& f);

// Equivalent single-block system: d_i d_j f = d_i' d_j' f whenever
// i + j = i' + j', and d_i d_j f = 0 whenever n - i - j <= -2.
struct SystemViolation {
    enum Kind { kEqualPair, kVanish } kind;
    int i, j, i2, j2;  // 1-based; (i2,j2) meaningful for kEqualPair only
    Polynomial value;  // the nonzero difference / second partial
};
std::vector<SystemViolation> check_system_form(int n, const Polynomial& f);

// True iff total degree <= 1.
bool is_linear(const Polynomial& f);

// Dimension bridge: d_{n+1-k} a0^(n)(F_1..F_n) versus
// a0^(k)(F_1',..,F_{k-1}',F_k) for k < n, or a0^(n)(F_1'..F_n') for k = n.
struct BridgeResult {
    Polynomial lhs, rhs;
    bool equal;
};
BridgeResult partial_bridge(const RingPtr& ring, int n, const std::vector<Polynomial>& F, int k);

}  // namespace fcc
