#include "fcc/a0.hpp"

#include <stdexcept>

namespace fcc {

namespace {

// Enumerates multisets {k_1 <= ... <= k_s} from [2,m] with the truncation
// m + s - sum(k) >= 1, accumulating each contribution into `out`.
void accumulate_terms(const RingPtr& ring, int m, int coord_offset,
                      const std::vector<Polynomial>& F,
                      std::vector<int>& counts, int next_k, int s, int sumk,
                      Polynomial& out) {
    if (s > 0) {
        int fidx = m + s - sumk;  // 1-based F index
        if (fidx >= 1) {
            // coefficient 1/prod(counts!) and monomial prod u_k^counts[k]
            Rational coeff = 1;
            Monomial mono(ring->nvars());
            for (int k = 2; k <= m; ++k) {
                for (int c = 2; c <= counts[static_cast<size_t>(k)]; ++c) coeff /= c;
                mono.e[static_cast<size_t>(coord_offset + k - 1)] = counts[static_cast<size_t>(k)];
            }
            // (d/du^1)^{s-1} F_fidx
            Polynomial d = F[static_cast<size_t>(fidx - 1)];
            for (int t = 0; t < s - 1; ++t) d = d.partial(coord_offset);
            Polynomial term(ring);
            term.add_term(mono, coeff);
            out += term * d;
        }
    }
    for (int k = next_k; k <= m; ++k) {
        if (m + (s + 1) - (sumk + k) < 1) break;  // larger k only shrink the index
        counts[static_cast<size_t>(k)] += 1;
        accumulate_terms(ring, m, coord_offset, F, counts, k, s + 1, sumk + k, out);
        counts[static_cast<size_t>(k)] -= 1;
    }
}

}  // namespace

Polynomial a0_single_block(const RingPtr& ring, int m, int coord_offset,
                           const std::vector<Polynomial>& F) {
    if (m < 1) throw std::invalid_argument("a0_single_block: block size must be positive");
    if (static_cast<int>(F.size()) != m)
        throw std::invalid_argument("a0_single_block: need exactly m coefficient functions");
    if (coord_offset < 0 || coord_offset + m > ring->ncoords())
        throw std::invalid_argument("a0_single_block: coordinate window out of range");

    Polynomial out = F[static_cast<size_t>(m - 1)];  // s = 0 term: F_m
    std::vector<int> counts(static_cast<size_t>(m + 1), 0);
    accumulate_terms(ring, m, coord_offset, F, counts, 2, 0, 0, out);
    return out;
}

Polynomial build_single_block(const RingPtr& ring, int n, const std::vector<Polynomial>& F) {
    return a0_single_block(ring, n, 0, F);
}

A0 build_a0(const JordanSpec& spec, const A0Family& fam, const RingPtr& ring) {
    if (static_cast<int>(fam.F.size()) != spec.nblocks())
        throw std::invalid_argument("build_a0: family/spec block count mismatch");
    Polynomial value(ring);
    for (int b = 0; b < spec.nblocks(); ++b) {
        if (static_cast<int>(fam.F[static_cast<size_t>(b)].size()) != spec.size(b))
            throw std::invalid_argument("build_a0: family list length does not match block size");
        value += a0_single_block(ring, spec.size(b), spec.flat(b, 1),
                                 fam.F[static_cast<size_t>(b)]);
    }
    return {value, true};
}

std::vector<MasterResidual> check_master(const JordanSpec& spec, const Polynomial& f) {
    const RingPtr& ring = f.ring();
    if (ring->ncoords() != spec.n())
        throw std::invalid_argument("check_master: dimension mismatch");
    std::vector<MasterResidual> out;
    int n = spec.n();
    for (int I = 0; I < n; ++I) {
        for (int J = I; J < n; ++J) {
            int a = spec.block_of(I), b = spec.block_of(J);
            int i = spec.inner_of(I), j = spec.inner_of(J);
            Polynomial res(ring);
            for (int s = i + 1; s <= spec.size(a); ++s)
                res += Polynomial::variable(ring, spec.flat(a, s - i + 1)) *
                       f.partial(spec.flat(a, s)).partial(J);
            for (int s = j + 1; s <= spec.size(b); ++s)
                res -= Polynomial::variable(ring, spec.flat(b, s - j + 1)) *
                       f.partial(spec.flat(b, s)).partial(I);
            res += (Polynomial::variable(ring, spec.flat(a, 1)) -
                    Polynomial::variable(ring, spec.flat(b, 1))) *
                   f.partial(I).partial(J);
            if (!res.is_zero()) out.push_back({I, J, res});
        }
    }
    return out;
}

std::vector<SystemViolation> check_system_form(int n, const Polynomial& f) {
    std::vector<SystemViolation> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            // compare with the shifted pair (i+1, j-1) of the same index sum
            if (i + 1 <= n && j - 1 >= i + 1) {
                Polynomial diff =
                    f.partial(i - 1).partial(j - 1) - f.partial(i).partial(j - 2);
                if (!diff.is_zero())
                    out.push_back({SystemViolation::kEqualPair, i, j, i + 1, j - 1, diff});
            }
            if (n - i - j <= -2) {
                Polynomial p = f.partial(i - 1).partial(j - 1);
                if (!p.is_zero())
                    out.push_back({SystemViolation::kVanish, i, j, 0, 0, p});
            }
        }
    }
    return out;
}

bool is_linear(const Polynomial& f) { return f.total_degree() <= 1; }

BridgeResult partial_bridge(const RingPtr& ring, int n, const std::vector<Polynomial>& F,
                            int k) {
    if (k < 1 || k > n) throw std::invalid_argument("partial_bridge: 1 <= k <= n required");
    Polynomial a0n = build_single_block(ring, n, F);
    Polynomial lhs = a0n.partial(n + 1 - k - 1);
    std::vector<Polynomial> G;
    if (k < n) {
        for (int i = 1; i <= k - 1; ++i) G.push_back(F[static_cast<size_t>(i - 1)].partial(0));
        G.push_back(F[static_cast<size_t>(k - 1)]);
    } else {
        for (int i = 1; i <= n; ++i) G.push_back(F[static_cast<size_t>(i - 1)].partial(0));
    }
    Polynomial rhs = build_single_block(ring, k, G);
    return {lhs, rhs, lhs == rhs};
}

}  // namespace fcc
