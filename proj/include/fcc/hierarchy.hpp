#pragma once

#include <vector>

#include "fcc/a0.hpp"
#include "fcc/tensors.hpp"

namespace fcc {

// The integrable hierarchy generated by a seed a0:
//   d a_{k+1} = d_L a_k - a_k d a0   (radially integrated, a_{k+1}(0) = 0),
//   V_{k+1} = V_k L - a_k I,         V_0 = I,
//   X_(k)  = V_k e.
struct Hierarchy {
    JordanSpec spec;
    std::vector<Polynomial> a;     // a_0 .. a_K
    std::vector<OneOneTensor> V;   // V_0 .. V_K
    std::vector<VectorField> X;    // X_(0) .. X_(K)
};

// One step of the a-recursion; throws ClosednessError (reporting an invalid
// seed) when d_L a_k - a_k d a0 fails to close.
Polynomial next_a(const JordanSpec& spec, const Polynomial& a_k, const Polynomial& a0,
                  const OneOneTensor& L);

// V_{k+1} = V_k L - a_k I.
OneOneTensor next_V(const OneOneTensor& V_k, const OneOneTensor& L, const Polynomial& a_k);

Hierarchy generate(const JordanSpec& spec, const A0& a0, int depth, const RingPtr& ring);

// Commutation of two hydrodynamic-type flows u_t = A u_x, u_tau = B u_x:
// [A,B] = 0 together with
//   (d_s A^i_j) B^s_m + A^i_s (d_j B^s_m) = (d_s B^i_j) A^s_m + B^i_s (d_j A^s_m).
struct CommutationResidual {
    enum Kind { kBracket, kDerivative } kind;
    int i, j, m;  // 0-based; m unused for kBracket
    RatExpr value;
};
std::vector<CommutationResidual> check_commutation(const OneOneTensor& A, const OneOneTensor& B);

// (det[X_(0)|...|X_(n-1)], det[e|E|...|E^{n-1}]); equality is the
// linear-independence proposition.
std::pair<RatExpr, RatExpr> independence_det(const Hierarchy& h, const RingPtr& ring);

}  // namespace fcc
