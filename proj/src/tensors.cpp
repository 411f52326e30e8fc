#include "fcc/tensors.hpp"

#include <stdexcept>

namespace fcc {

OneOneTensor OneOneTensor::operator*(const OneOneTensor& o) const {
    if (n_ != o.n_) throw std::invalid_argument("tensor dimension mismatch");
    OneOneTensor r(n_, at(0, 0).ring());
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            RatExpr acc = RatExpr::constant(at(0, 0).ring(), 0);
            for (int s = 0; s < n_; ++s) acc += at(i, s) * o.at(s, j);
            r.at(i, j) = acc;
        }
    }
    return r;
}

OneOneTensor OneOneTensor::operator+(const OneOneTensor& o) const {
    if (n_ != o.n_) throw std::invalid_argument("tensor dimension mismatch");
    OneOneTensor r = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) += o.at(i, j);
    return r;
}

OneOneTensor OneOneTensor::operator-(const OneOneTensor& o) const {
    if (n_ != o.n_) throw std::invalid_argument("tensor dimension mismatch");
    OneOneTensor r = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) -= o.at(i, j);
    return r;
}

VectorField OneOneTensor::apply(const VectorField& x) const {
    if (n_ != x.dim()) throw std::invalid_argument("tensor/vector dimension mismatch");
    VectorField r;
    for (int i = 0; i < n_; ++i) {
        RatExpr acc = RatExpr::constant(at(0, 0).ring(), 0);
        for (int j = 0; j < n_; ++j) acc += at(i, j) * x[j];
        r.components.push_back(acc);
    }
    return r;
}

bool OneOneTensor::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

ThreeTensor ThreeTensor::from_ctensor(const CTensor& c, const RingPtr& ring) {
    int n = c.spec().n();
    ThreeTensor t(n, ring);
    for (const auto& tr : c.triples())
        t.at(tr.i, tr.j, tr.k) = RatExpr::constant(ring, 1);
    return t;
}

bool ThreeTensor::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

CanonicalStructure canonical_structure(const JordanSpec& spec, const RingPtr& ring) {
    if (ring->ncoords() != spec.n())
        throw std::invalid_argument("canonical_structure: ring/spec dimension mismatch");
    int n = spec.n();
    CTensor c(spec);
    VectorField e, E;
    for (int i = 0; i < n; ++i) {
        e.components.push_back(
            RatExpr::constant(ring, spec.inner_of(i) == 1 ? 1 : 0));
        E.components.push_back(RatExpr::variable(ring, i));
    }
    OneOneTensor L = mult_operator(E, c);
    return {c, e, E, L};
}

VectorField circ(const VectorField& X, const VectorField& Y, const CTensor& c) {
    int n = c.spec().n();
    if (X.dim() != n || Y.dim() != n) throw std::invalid_argument("circ: dimension mismatch");
    const RingPtr& ring = X[0].ring();
    VectorField r;
    for (int i = 0; i < n; ++i) {
        RatExpr acc = RatExpr::constant(ring, 0);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (c.value(i, j, k)) acc += X[j] * Y[k];
        r.components.push_back(acc);
    }
    return r;
}

OneOneTensor mult_operator(const VectorField& X, const CTensor& c) {
    int n = c.spec().n();
    if (X.dim() != n) throw std::invalid_argument("mult_operator: dimension mismatch");
    OneOneTensor t(n, X[0].ring());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            RatExpr acc = RatExpr::constant(X[0].ring(), 0);
            for (int j = 0; j < n; ++j)
                if (c.value(i, j, k)) acc += X[j];
            t.at(i, k) = acc;
        }
    return t;
}

namespace {

// Fraction-free Bareiss determinant of a polynomial matrix.
Polynomial bareiss_det(std::vector<std::vector<Polynomial>> m, const RingPtr& ring) {
    int n = static_cast<int>(m.size());
    if (n == 0) return Polynomial::constant(ring, 1);
    int sign = 1;
    Polynomial prev = Polynomial::constant(ring, 1);
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { p = i; break; }
            if (p < 0) return Polynomial(ring);  // singular
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = num.exact_divide(prev);
                if (!q) throw std::logic_error("Bareiss division failed");
                m[i][j] = *q;
            }
            m[i][k] = Polynomial(ring);
        }
        prev = m[k][k];
    }
    Polynomial d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

}  // namespace

RatExpr det(const OneOneTensor& T) {
    int n = T.dim();
    const RingPtr& ring = T.at(0, 0).ring();
    // Clear each row to polynomial form by its denominator lcm.
    std::vector<std::vector<Polynomial>> m(static_cast<size_t>(n));
    RatExpr scale = RatExpr::constant(ring, 1);
    for (int i = 0; i < n; ++i) {
        std::vector<RatExpr> row;
        for (int j = 0; j < n; ++j) row.push_back(T.at(i, j));
        Polynomial d = RatExpr::den_lcm(ring, row);
        scale = scale * RatExpr(Polynomial::constant(ring, 1), d);
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i)].push_back((row[static_cast<size_t>(j)] * RatExpr(d)).to_polynomial());
    }
    return RatExpr(bareiss_det(std::move(m), ring)) * scale;
}

RatExpr det_columns(const std::vector<VectorField>& cols, const RingPtr& ring) {
    int n = static_cast<int>(cols.size());
    OneOneTensor t(n, ring);
    for (int j = 0; j < n; ++j) {
        if (cols[static_cast<size_t>(j)].dim() != n)
            throw std::invalid_argument("det_columns: not square");
        for (int i = 0; i < n; ++i) t.at(i, j) = cols[static_cast<size_t>(j)][i];
    }
    return det(t);
}

OneOneTensor invert(const OneOneTensor& T) {
    int n = T.dim();
    const RingPtr& ring = T.at(0, 0).ring();
    OneOneTensor a = T;
    OneOneTensor inv = OneOneTensor::identity(n, ring);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!a.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) throw std::domain_error("invert: singular operator");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        RatExpr p = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(col, j) *= p;
            inv.at(col, j) *= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            RatExpr f = a.at(i, col);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

ThreeTensor nijenhuis(const OneOneTensor& T) {
    int n = T.dim();
    const RingPtr& ring = T.at(0, 0).ring();
    ThreeTensor N(n, ring);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < j; ++k) {
                RatExpr acc = RatExpr::constant(ring, 0);
                for (int s = 0; s < n; ++s) {
                    acc += T.at(s, j) * T.at(i, k).partial(s);
                    acc -= T.at(s, k) * T.at(i, j).partial(s);
                    acc -= T.at(i, s) * (T.at(s, k).partial(j) - T.at(s, j).partial(k));
                }
                N.at(i, j, k) = acc;
                N.at(i, k, j) = -acc;
            }
    return N;
}

std::vector<HMResidualEntry> hertling_manin_residual(const ThreeTensor& c) {
    int n = c.dim();
    const RingPtr& ring = c.at(0, 0, 0).ring();
    std::vector<HMResidualEntry> out;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int m = 0; m < n; ++m)
                for (int j = 0; j < n; ++j)
                    for (int l = 0; l < n; ++l) {
                        RatExpr acc = RatExpr::constant(ring, 0);
                        for (int s = 0; s < n; ++s) {
                            acc += c.at(k, i, m).partial(s) * c.at(s, j, l);
                            acc -= c.at(k, j, l).partial(s) * c.at(s, i, m);
                            acc += c.at(s, j, l).partial(i) * c.at(k, s, m);
                            acc += c.at(s, j, l).partial(m) * c.at(k, s, i);
                            acc -= c.at(s, i, m).partial(l) * c.at(k, j, s);
                            acc -= c.at(s, i, m).partial(j) * c.at(k, l, s);
                        }
                        if (!acc.is_zero()) out.push_back({k, i, m, j, l, acc});
                    }
    return out;
}

std::vector<AssocResidualEntry> associativity_residual(const ThreeTensor& c) {
    int n = c.dim();
    const RingPtr& ring = c.at(0, 0, 0).ring();
    std::vector<AssocResidualEntry> out;
    for (int d = 0; d < n; ++d)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    RatExpr acc = RatExpr::constant(ring, 0);
                    for (int m = 0; m < n; ++m)
                        acc += c.at(m, i, j) * c.at(d, m, k) - c.at(m, j, k) * c.at(d, i, m);
                    if (!acc.is_zero()) out.push_back({d, i, j, k, acc});
                }
    return out;
}

OneForm d_L_function(const Polynomial& f, const OneOneTensor& L) {
    int n = L.dim();
    if (f.ring()->ncoords() != n)
        throw std::invalid_argument("d_L_function: dimension mismatch");
    OneForm w;
    for (int i = 0; i < n; ++i) {
        Polynomial acc(f.ring());
        for (int s = 0; s < n; ++s) {
            if (L.at(s, i).is_zero()) continue;
            acc += L.at(s, i).to_polynomial() * f.partial(s);
        }
        w.components.push_back(acc);
    }
    return w;
}

}  // namespace fcc
