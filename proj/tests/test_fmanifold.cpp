#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fcc/tensors.hpp"
#include "test_util.hpp"

using namespace fcc;

namespace {

RatExpr uu(const RingPtr& r, int i, int p = 1) { return RatExpr::variable(r, i - 1, p); }

VectorField random_field(std::mt19937& rng, const RingPtr& ring) {
    VectorField v;
    for (int i = 0; i < ring->ncoords(); ++i)
        v.components.push_back(RatExpr(testutil::random_poly(rng, ring, 2, 4)));
    return v;
}

}  // namespace

TEST_CASE("canonical structure for spec (2)") {
    JordanSpec spec({2});
    auto ring = make_ring(2);
    auto S = canonical_structure(spec, ring);
    CHECK(S.L.at(0, 0) == uu(ring, 1));
    CHECK(S.L.at(0, 1).is_zero());
    CHECK(S.L.at(1, 0) == uu(ring, 2));
    CHECK(S.L.at(1, 1) == uu(ring, 1));
    CHECK(S.e[0] == RatExpr::constant(ring, 1));
    CHECK(S.e[1].is_zero());
    CHECK(S.E[0] == uu(ring, 1));
    CHECK(S.E[1] == uu(ring, 2));
}

TEST_CASE("canonical structure for spec (1,1)") {
    JordanSpec spec({1, 1});
    auto ring = make_ring(2);
    auto S = canonical_structure(spec, ring);
    CHECK(S.L.at(0, 0) == uu(ring, 1));
    CHECK(S.L.at(1, 1) == uu(ring, 2));
    CHECK(S.L.at(0, 1).is_zero());
    CHECK(S.L.at(1, 0).is_zero());
    CHECK(S.e[0] == RatExpr::constant(ring, 1));
    CHECK(S.e[1] == RatExpr::constant(ring, 1));
}

TEST_CASE("c-tensor sparsity for spec (2,1)") {
    JordanSpec spec({2, 1});
    CTensor c(spec);
    auto triples = c.triples();
    // expected (1-based): c^1_11, c^2_12, c^2_21, c^3_33
    REQUIRE(triples.size() == 4);
    auto has = [&](int i, int j, int k) {
        for (const auto& t : triples)
            if (t.i == i - 1 && t.j == j - 1 && t.k == k - 1) return true;
        return false;
    };
    CHECK(has(1, 1, 1));
    CHECK(has(2, 1, 2));
    CHECK(has(2, 2, 1));
    CHECK(has(3, 3, 3));
}

TEST_CASE("circ: unit, commutativity, Euler square") {
    std::mt19937 rng(11);
    JordanSpec spec({3});
    auto ring = make_ring(3);
    auto S = canonical_structure(spec, ring);
    for (int it = 0; it < 5; ++it) {
        VectorField Y = random_field(rng, ring);
        VectorField eY = circ(S.e, Y, S.c);
        for (int i = 0; i < 3; ++i) CHECK(eY[i] == Y[i]);
        VectorField X = random_field(rng, ring);
        VectorField XY = circ(X, Y, S.c), YX = circ(Y, X, S.c);
        for (int i = 0; i < 3; ++i) CHECK(XY[i] == YX[i]);
    }

    JordanSpec spec2({2});
    auto ring2 = make_ring(2);
    auto S2 = canonical_structure(spec2, ring2);
    VectorField EE = circ(S2.E, S2.E, S2.c);
    CHECK(EE[0] == uu(ring2, 1, 2));
    CHECK(EE[1] == Rational(2) * uu(ring2, 1) * uu(ring2, 2));
}

TEST_CASE("mult_operator") {
    JordanSpec spec({2});
    auto ring = make_ring(2);
    auto S = canonical_structure(spec, ring);
    OneOneTensor Ie = mult_operator(S.e, S.c);
    CHECK(Ie.at(0, 0) == RatExpr::constant(ring, 1));
    CHECK(Ie.at(1, 1) == RatExpr::constant(ring, 1));
    CHECK(Ie.at(0, 1).is_zero());
    CHECK(Ie.at(1, 0).is_zero());

    // mult_operator(E - a0 e) = L - a0 I for a0 = u1*u2
    RatExpr a0 = uu(ring, 1) * uu(ring, 2);
    VectorField X = S.E;
    X[0] -= a0;  // subtract a0*e
    OneOneTensor M = mult_operator(X, S.c);
    CHECK(M.at(0, 0) == uu(ring, 1) - a0);
    CHECK(M.at(0, 1).is_zero());
    CHECK(M.at(1, 0) == uu(ring, 2));
    CHECK(M.at(1, 1) == uu(ring, 1) - a0);

    // mult_operator(X o Y) = mult_operator(X) * mult_operator(Y)
    std::mt19937 rng(3);
    JordanSpec spec3({2, 1});
    auto ring3 = make_ring(3);
    auto S3 = canonical_structure(spec3, ring3);
    for (int it = 0; it < 4; ++it) {
        VectorField A = random_field(rng, ring3), B = random_field(rng, ring3);
        OneOneTensor lhs = mult_operator(circ(A, B, S3.c), S3.c);
        OneOneTensor rhs = mult_operator(A, S3.c) * mult_operator(B, S3.c);
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("determinants") {
    auto ring = make_ring(2);
    CHECK(det(OneOneTensor::identity(2, ring)) == RatExpr::constant(ring, 1));

    JordanSpec spec({2});
    auto S = canonical_structure(spec, ring);
    CHECK(det(S.L) == uu(ring, 1, 2));

    // det[e | E - a0 e] = det[e | E] for a0 = u1*u2
    VectorField X = S.E;
    X[0] -= uu(ring, 1) * uu(ring, 2);
    CHECK(det_columns({S.e, X}, ring) == uu(ring, 2));
    CHECK(det_columns({S.e, S.E}, ring) == uu(ring, 2));
}

TEST_CASE("inverse") {
    auto ring = make_ring(2);
    JordanSpec spec({2});
    auto S = canonical_structure(spec, ring);
    OneOneTensor Li = invert(S.L);
    CHECK(Li.at(0, 0) == RatExpr::constant(ring, 1) / uu(ring, 1));
    CHECK(Li.at(0, 1).is_zero());
    CHECK(Li.at(1, 0) == -uu(ring, 2) / uu(ring, 1, 2));
    CHECK(Li.at(1, 1) == RatExpr::constant(ring, 1) / uu(ring, 1));

    CHECK((invert(OneOneTensor::identity(3, make_ring(3))) -
           OneOneTensor::identity(3, make_ring(3)))
              .is_zero());

    auto ring3 = make_ring(3);
    auto S3 = canonical_structure(JordanSpec({3}), ring3);
    OneOneTensor prod = S3.L * invert(S3.L);
    CHECK((prod - OneOneTensor::identity(3, ring3)).is_zero());
}

TEST_CASE("nijenhuis torsion") {
    auto ring = make_ring(2);
    CHECK(nijenhuis(OneOneTensor::identity(2, ring)).is_zero());

    // N(L) = 0 for every spec with n <= 6
    for (const auto& sizes : std::vector<std::vector<int>>{
             {2, 1}, {3}, {2, 2}, {3, 1}, {2, 1, 1}, {4}, {3, 2, 1}, {6}}) {
        JordanSpec spec(sizes);
        auto r = make_ring(spec.n());
        auto S = canonical_structure(spec, r);
        CHECK(nijenhuis(S.L).is_zero());
    }

    // T = diag(u2, u1) has nonzero torsion
    OneOneTensor T(2, ring);
    T.at(0, 0) = uu(ring, 2);
    T.at(1, 1) = uu(ring, 1);
    CHECK_FALSE(nijenhuis(T).is_zero());
}

TEST_CASE("Hertling-Manin residual and associativity") {
    // canonical constant c: residual vanishes
    for (const auto& sizes : std::vector<std::vector<int>>{{2}, {2, 2}, {3}}) {
        JordanSpec spec(sizes);
        auto r = make_ring(spec.n());
        CTensor c(spec);
        CHECK(hertling_manin_residual(ThreeTensor::from_ctensor(c, r)).empty());
        CHECK(associativity_residual(ThreeTensor::from_ctensor(c, r)).empty());
    }

    // Constant perturbations are invisible to the coordinate Hertling-Manin
    // condition (every term carries a derivative of c). Zeroing c^3_22 in
    // spec (3) even stays associative (the algebra truncates harder), while
    // zeroing c^1_11 genuinely breaks associativity.
    {
        JordanSpec spec({3});
        auto r = make_ring(3);
        ThreeTensor c = ThreeTensor::from_ctensor(CTensor(spec), r);
        c.at(2, 1, 1) = RatExpr::constant(r, 0);
        CHECK(hertling_manin_residual(c).empty());
        CHECK(associativity_residual(c).empty());

        ThreeTensor c2 = ThreeTensor::from_ctensor(CTensor(spec), r);
        c2.at(0, 0, 0) = RatExpr::constant(r, 0);
        CHECK(hertling_manin_residual(c2).empty());
        CHECK_FALSE(associativity_residual(c2).empty());
    }

    // a coordinate-dependent perturbation does produce a nonzero residual
    {
        JordanSpec spec({2});
        auto r = make_ring(2);
        ThreeTensor c = ThreeTensor::from_ctensor(CTensor(spec), r);
        c.at(1, 1, 1) = uu(r, 1);  // c^2_22 = u1
        CHECK_FALSE(hertling_manin_residual(c).empty());
    }
}

TEST_CASE("d_L on functions") {
    auto ring = make_ring(2);
    auto S = canonical_structure(JordanSpec({2}), ring);
    Polynomial f = Polynomial::variable(ring, 1);  // u2
    OneForm w = d_L_function(f, S.L);
    CHECK(w.components[0] == Polynomial::variable(ring, 1));
    CHECK(w.components[1] == Polynomial::variable(ring, 0));

    CHECK(d_L_function(Polynomial::constant(ring, 5), S.L).components[0].is_zero());

    auto ring2 = make_ring(2);
    auto S2 = canonical_structure(JordanSpec({1, 1}), ring2);
    OneForm w2 = d_L_function(Polynomial::variable(ring2, 0), S2.L);
    CHECK(w2.components[0] == Polynomial::variable(ring2, 0));
    CHECK(w2.components[1].is_zero());
}

TEST_CASE("hierarchy independence determinant identity (fmanifold view)") {
    // det[X0|...|X_{n-1}] = det[e|E|...|E^{n-1}] is exercised fully in the
    // hierarchy tests; here check the powers-of-E determinant is nonzero.
    for (const auto& sizes : std::vector<std::vector<int>>{{2}, {2, 1}, {3}}) {
        JordanSpec spec(sizes);
        auto r = make_ring(spec.n());
        auto S = canonical_structure(spec, r);
        std::vector<VectorField> cols{S.e};
        VectorField p = S.e;
        for (int k = 1; k < spec.n(); ++k) {
            p = circ(p, S.E, S.c);
            cols.push_back(p);
        }
        CHECK_FALSE(det_columns(cols, r).is_zero());
    }
}
