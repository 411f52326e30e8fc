#pragma once

#include <vector>

#include "fcc/calculus.hpp"
#include "fcc/jordan.hpp"
#include "fcc/ratexpr.hpp"

namespace fcc {

struct VectorField {
    std::vector<RatExpr> components;

    int dim() const { return static_cast<int>(components.size()); }
    const RatExpr& operator[](int i) const { return components[static_cast<size_t>(i)]; }
    RatExpr& operator[](int i) { return components[static_cast<size_t>(i)]; }
};

// (1,1)-tensor; entry (i,j) is T^i_j (row = upper index).
class OneOneTensor {
public:
    OneOneTensor() = default;
    OneOneTensor(int n, const RingPtr& ring)
        : n_(n), entries_(static_cast<size_t>(n * n), RatExpr::constant(ring, 0)) {}

    static OneOneTensor identity(int n, const RingPtr& ring) {
        OneOneTensor t(n, ring);
        for (int i = 0; i < n; ++i) t.at(i, i) = RatExpr::constant(ring, 1);
        return t;
    }

    int dim() const { return n_; }
    const RatExpr& at(int i, int j) const { return entries_[static_cast<size_t>(i * n_ + j)]; }
    RatExpr& at(int i, int j) { return entries_[static_cast<size_t>(i * n_ + j)]; }

    OneOneTensor operator*(const OneOneTensor& o) const;
    OneOneTensor operator+(const OneOneTensor& o) const;
    OneOneTensor operator-(const OneOneTensor& o) const;
    VectorField apply(const VectorField& x) const;
    bool is_zero() const;

private:
    int n_ = 0;
    std::vector<RatExpr> entries_;
};

// Canonical structure constants: c^{i(a)}_{j(b)k(g)} = [a=b=g][i = j+k-1].
// Stored as the spec; values are 0/1.
class CTensor {
public:
    explicit CTensor(JordanSpec spec) : spec_(std::move(spec)) {}

    const JordanSpec& spec() const { return spec_; }

    // Entry at flat 0-based indices.
    int value(int i, int j, int k) const {
        int b = spec_.block_of(i);
        if (spec_.block_of(j) != b || spec_.block_of(k) != b) return 0;
        return spec_.inner_of(j) + spec_.inner_of(k) - 1 == spec_.inner_of(i) ? 1 : 0;
    }

    struct Triple { int i, j, k; };
    std::vector<Triple> triples() const {
        std::vector<Triple> out;
        for (int i = 0; i < spec_.n(); ++i)
            for (int j = 0; j < spec_.n(); ++j)
                for (int k = 0; k < spec_.n(); ++k)
                    if (value(i, j, k)) out.push_back({i, j, k});
        return out;
    }

private:
    JordanSpec spec_;
};

// Dense 3-index array of rational expressions, entry (i,j,k) = t^i_{jk}.
class ThreeTensor {
public:
    ThreeTensor() = default;
    ThreeTensor(int n, const RingPtr& ring)
        : n_(n), entries_(static_cast<size_t>(n * n * n), RatExpr::constant(ring, 0)) {}

    static ThreeTensor from_ctensor(const CTensor& c, const RingPtr& ring);

    int dim() const { return n_; }
    const RatExpr& at(int i, int j, int k) const {
        return entries_[static_cast<size_t>((i * n_ + j) * n_ + k)];
    }
    RatExpr& at(int i, int j, int k) {
        return entries_[static_cast<size_t>((i * n_ + j) * n_ + k)];
    }
    bool is_zero() const;

private:
    int n_ = 0;
    std::vector<RatExpr> entries_;
};

struct CanonicalStructure {
    CTensor c;
    VectorField e;  // unit: 1 at each block's first flat coordinate
    VectorField E;  // Euler field: E^i = u^i
    OneOneTensor L; // E-multiplication, block lower-triangular Toeplitz
};

// The David-Hertling canonical data of the regular F-manifold for `spec`,
// built over `ring` (which must have ncoords = spec.n()).
CanonicalStructure canonical_structure(const JordanSpec& spec, const RingPtr& ring);

// (X o Y)^i = c^i_{jk} X^j Y^k.
VectorField circ(const VectorField& X, const VectorField& Y, const CTensor& c);

// (X o)^i_k = c^i_{jk} X^j.
OneOneTensor mult_operator(const VectorField& X, const CTensor& c);

// Exact determinant: rows cleared to polynomial form, then fraction-free
// Bareiss elimination.
RatExpr det(const OneOneTensor& T);

// Determinant of the matrix whose columns are the given vector fields.
RatExpr det_columns(const std::vector<VectorField>& cols, const RingPtr& ring);

// Exact inverse by Gauss-Jordan elimination; throws on singular input.
OneOneTensor invert(const OneOneTensor& T);

// Nijenhuis torsion N^i_{jk} of a (1,1)-tensor field.
ThreeTensor nijenhuis(const OneOneTensor& T);

// Left-hand side of the Hertling-Manin integrability condition in
// coordinates, for a (possibly coordinate-dependent) symmetric c. The
// result is keyed by the free indices (k, i, m, j, l), nonzero entries only.
struct HMResidualEntry {
    int k, i, m, j, l;
    RatExpr value;
};
std::vector<HMResidualEntry> hertling_manin_residual(const ThreeTensor& c);

// Associativity residual c^m_{ij} c^d_{mk} - c^m_{jk} c^d_{im}, nonzero
// entries keyed by (d, i, j, k).
struct AssocResidualEntry {
    int d, i, j, k;
    RatExpr value;
};
std::vector<AssocResidualEntry> associativity_residual(const ThreeTensor& c);

// (d_L f)_i = L^s_i d_s f; polynomial because L entries are coordinates.
OneForm d_L_function(const Polynomial& f, const OneOneTensor& L);

}  // namespace fcc
