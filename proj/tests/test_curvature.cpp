#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fcc/curvature.hpp"
#include "test_util.hpp"

using namespace fcc;

namespace {

Polynomial u(const RingPtr& r, int i, int p = 1) { return Polynomial::variable(r, i - 1, p); }
RatExpr uu(const RingPtr& r, int i, int p = 1) { return RatExpr::variable(r, i - 1, p); }

A0Family random_family(std::mt19937& rng, const JordanSpec& spec, const RingPtr& ring,
                       int maxdeg = 2) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, maxdeg);
    A0Family fam;
    for (int b = 0; b < spec.nblocks(); ++b) {
        std::vector<Polynomial> F;
        for (int i = 0; i < spec.size(b); ++i) {
            Polynomial p(ring);
            int d = deg(rng);
            for (int k = 0; k <= d; ++k) {
                int c = coeff(rng);
                if (c != 0) p += Rational(c) * Polynomial::variable(ring, spec.flat(b, 1), k);
            }
            F.push_back(p);
        }
        fam.F.push_back(F);
    }
    return fam;
}

// F_i constant for i < m, F_m linear in the block's first coordinate: the
// resulting a0 is the general linear solution.
A0Family random_linear_family(std::mt19937& rng, const JordanSpec& spec, const RingPtr& ring) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    A0Family fam;
    for (int b = 0; b < spec.nblocks(); ++b) {
        std::vector<Polynomial> F;
        int m = spec.size(b);
        for (int i = 1; i < m; ++i) F.push_back(Polynomial::constant(ring, coeff(rng)));
        Polynomial top = Polynomial::constant(ring, coeff(rng));
        top += Rational(coeff(rng)) * Polynomial::variable(ring, spec.flat(b, 1));
        F.push_back(top);
        fam.F.push_back(F);
    }
    return fam;
}

A0Family nonlinear_family(std::mt19937& rng, const JordanSpec& spec, const RingPtr& ring) {
    A0Family fam = random_family(rng, spec, ring, 2);
    // force nonlinearity through the first block's leading coefficient
    fam.F[0][0] += Polynomial::variable(ring, spec.flat(0, 1), 2);
    return fam;
}

const std::vector<std::vector<int>> kAllSpecs{{2},      {3},      {2, 1}, {4},
                                              {3, 1},   {2, 2},   {2, 1, 1}};

}  // namespace

TEST_CASE("spec (2), a0 = u1*u2: pinned curvature") {
    JordanSpec spec({2});
    auto ring = make_ring(2);
    Polynomial a0 = u(ring, 1) * u(ring, 2);
    Connection G = solve_connection(spec, a0, ring);
    RiemannTensor R = riemann(G, ring);
    CHECK(R.at(0, 1, 0, 1) == RatExpr::constant(ring, -1) / uu(ring, 2));
    CHECK(R.at(0, 1, 1, 0) == RatExpr::constant(ring, 1) / uu(ring, 2));
    CHECK_FALSE(is_flat(R));
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) CHECK(R.at(k, l, i, j) == -R.at(k, l, j, i));
    // e-flatness obstruction at G^1_{22} = u1/u2
    ThreeTensor ef = e_flatness_residual(G, spec);
    CHECK(ef.at(0, 1, 1) == RatExpr::constant(ring, 1) / uu(ring, 2));
    CHECK_FALSE(ef.is_zero());
}

TEST_CASE("zero connection is flat with zero e-flatness residual") {
    auto ring = make_ring(3);
    Connection G(3, ring);
    CHECK(is_flat(riemann(G, ring)));
    CHECK(e_flatness_residual(G, JordanSpec({3})).is_zero());
}

TEST_CASE("linear a0 gives flat connections, nonlinear does not") {
    std::mt19937 rng(11);
    for (const auto& sizes : kAllSpecs) {
        JordanSpec spec(sizes);
        auto ring = make_ring(spec.n());
        {
            A0 a0 = build_a0(spec, random_linear_family(rng, spec, ring), ring);
            REQUIRE(is_linear(a0.value));
            Connection G = solve_connection(spec, a0.value, ring);
            CHECK(is_flat(riemann(G, ring)));
            CHECK(e_flatness_residual(G, spec).is_zero());
        }
        {
            A0 a0 = build_a0(spec, nonlinear_family(rng, spec, ring), ring);
            REQUIRE_FALSE(is_linear(a0.value));
            Connection G = solve_connection(spec, a0.value, ring);
            CHECK_FALSE(is_flat(riemann(G, ring)));
        }
    }
}

TEST_CASE("symbolic-epsilon linear a0 is flat") {
    for (const auto& sizes : kAllSpecs) {
        JordanSpec spec(sizes);
        auto rw = std::make_shared<Ring>(spec.n());
        std::vector<int> evar;
        for (int b = 0; b < spec.nblocks(); ++b)
            evar.push_back(rw->add_symbol("e" + std::to_string(b + 1)));
        RingPtr ring(rw);
        Polynomial a0(ring);
        for (int b = 0; b < spec.nblocks(); ++b)
            a0 += Polynomial::variable(ring, evar[static_cast<size_t>(b)]) *
                  Polynomial::variable(ring, spec.flat(b, 1));
        REQUIRE(check_master(spec, a0).empty());
        Connection G = solve_connection(spec, a0, ring);
        CHECK(is_flat(riemann(G, ring)));
    }
}

TEST_CASE("3RC residual vanishes for solver output and detects a non-solution") {
    std::mt19937 rng(12);
    for (const auto& sizes : kAllSpecs) {
        JordanSpec spec(sizes);
        auto ring = make_ring(spec.n());
        A0 a0 = build_a0(spec, random_family(rng, spec, ring), ring);
        Connection G = solve_connection(spec, a0.value, ring);
        RiemannTensor R = riemann(G, ring);
        CHECK(check_3RC(R, CTensor(spec), ring).empty());
    }
    // a0 = u3^2 is not a solution of the master equation on a single 3-block
    JordanSpec spec({3});
    auto ring = make_ring(3);
    Polynomial bad = u(ring, 3, 2);
    REQUIRE_FALSE(check_master(spec, bad).empty());
    Connection G = solve_connection(spec, bad, ring);
    RiemannTensor R = riemann(G, ring);
    CHECK_FALSE(check_3RC(R, CTensor(spec), ring).empty());
}

TEST_CASE("dual structure: pinned dimension-2 table with symbolic epsilon") {
    JordanSpec spec({2});
    auto rw = std::make_shared<Ring>(2);
    int e1 = rw->add_symbol("e1");
    int e2 = rw->add_symbol("e2");
    RingPtr ring(rw);
    Polynomial E1 = Polynomial::variable(ring, e1), E2 = Polynomial::variable(ring, e2);
    Polynomial a0 = E1 * u(ring, 1) + E2 * u(ring, 2);
    Connection G = solve_connection(spec, a0, ring);
    DualStructure D = dual_structure(spec, G, ring);
    RatExpr one = RatExpr::constant(ring, 1);
    CHECK(D.gamma_star.at(0, 0, 0) == (RatExpr(E2) * uu(ring, 2) - uu(ring, 1)) / uu(ring, 1, 2));
    CHECK(D.gamma_star.at(0, 0, 1) == -(RatExpr(E2) / uu(ring, 1)));
    CHECK(D.gamma_star.at(0, 1, 1) == RatExpr(E2) / uu(ring, 2));
    CHECK(D.gamma_star.at(1, 0, 0) == uu(ring, 2) * (one - RatExpr(E1)) / uu(ring, 1, 2));
    CHECK(D.gamma_star.at(1, 0, 1) == (RatExpr(E1) - one) / uu(ring, 1));
    CHECK(D.gamma_star.at(1, 1, 1) == -(RatExpr(E1) / uu(ring, 2)));
    // symmetry of the dual symbols and flatness of the dual connection
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                CHECK(D.gamma_star.at(i, j, k) == D.gamma_star.at(i, k, j));
    CHECK(is_flat(riemann(D.gamma_star, ring)));
}

TEST_CASE("dual product: E is the unit and c* is symmetric") {
    std::mt19937 rng(13);
    for (const auto& sizes : std::vector<std::vector<int>>{{3}, {2, 1}, {2, 2}}) {
        JordanSpec spec(sizes);
        auto ring = make_ring(spec.n());
        int n = spec.n();
        A0 a0 = build_a0(spec, random_family(rng, spec, ring), ring);
        Connection G = solve_connection(spec, a0.value, ring);
        DualStructure D = dual_structure(spec, G, ring);
        auto S = canonical_structure(spec, ring);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                RatExpr acc = RatExpr::constant(ring, 0);
                for (int j = 0; j < n; ++j) acc += D.cstar.at(i, j, k) * S.E[j];
                CHECK(acc == RatExpr::constant(ring, i == k ? 1 : 0));
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < j; ++k) CHECK(D.cstar.at(i, j, k) == D.cstar.at(i, k, j));
    }
}

TEST_CASE("dual connection is flat for linear a0, all specs") {
    std::mt19937 rng(14);
    for (const auto& sizes : kAllSpecs) {
        JordanSpec spec(sizes);
        auto ring = make_ring(spec.n());
        A0 a0 = build_a0(spec, random_linear_family(rng, spec, ring), ring);
        Connection G = solve_connection(spec, a0.value, ring);
        DualStructure D = dual_structure(spec, G, ring);
        CHECK(is_flat(riemann(D.gamma_star, ring)));
    }
}

TEST_CASE("metric fixture, dimension 2: a0 = -u1, g = [[F1(u2), C u2],[C u2, 0]]") {
    JordanSpec spec({2});
    auto ring = make_ring(2);
    Polynomial a0 = Rational(-1) * u(ring, 1);
    Connection G = solve_connection(spec, a0, ring);
    {
        Metric g(2, ring);
        g.set_sym(0, 1, uu(ring, 2));
        REQUIRE(g.is_symmetric());
        MetricReport rep = metric_checks(spec, g, G, ring);
        CHECK(rep.invariant);
        CHECK(rep.killing);
        CHECK(rep.bridge);
    }
    {
        // nontrivial F1 and C1
        Metric g(2, ring);
        g.at(0, 0) = uu(ring, 2, 2);
        g.set_sym(0, 1, RatExpr::constant(ring, 2) * uu(ring, 2));
        CHECK(metric_checks(spec, g, G, ring).all());
    }
    {
        // identity metric fails the bridge equation
        Metric g(2, ring);
        g.at(0, 0) = RatExpr::constant(ring, 1);
        g.at(1, 1) = RatExpr::constant(ring, 1);
        MetricReport rep = metric_checks(spec, g, G, ring);
        CHECK_FALSE(rep.bridge);
    }
}

TEST_CASE("metric fixture, dimension 3: a0 = -3 u1") {
    JordanSpec spec({3});
    auto ring = make_ring(3);
    Polynomial a0 = Rational(-3) * u(ring, 1);
    Connection G = solve_connection(spec, a0, ring);
    // epsilon_1 = -3, C1 = 1, F1 = 0, F2 = 5: all exponents are integers
    Metric g(3, ring);
    g.at(0, 0) = RatExpr::constant(ring, 3) * uu(ring, 2, 2) * uu(ring, 3, 2) +
                 RatExpr::constant(ring, 5);
    g.set_sym(0, 1, RatExpr::constant(ring, 2) * uu(ring, 2, 3) * uu(ring, 3));
    g.set_sym(0, 2, uu(ring, 2, 4));
    g.at(1, 1) = g.at(0, 2);
    REQUIRE(g.is_symmetric());
    MetricReport rep = metric_checks(spec, g, G, ring);
    CHECK(rep.invariant);
    CHECK(rep.killing);
    CHECK(rep.bridge);
}
