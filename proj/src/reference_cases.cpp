#include "fcc/reference_cases.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

#include "fcc/a0.hpp"

namespace fcc {

namespace {

Polynomial up(const RingPtr& r, int i, int p = 1) { return Polynomial::variable(r, i - 1, p); }
RatExpr U(const RingPtr& r, int i, int p = 1) { return RatExpr::variable(r, i - 1, p); }

std::string sub3(int i, int j, int k) {
    std::ostringstream os;
    os << "^" << i << "_{" << j << k << "}";
    return os.str();
}

// Expected-connection table with 1-based, symmetric assignment.
struct Tbl {
    Connection want;
    Tbl(int n, const RingPtr& ring) : want(n, ring) {}
    void set(int i, int j, int k, const RatExpr& v) {
        want.at(i - 1, j - 1, k - 1) = v;
        want.at(i - 1, k - 1, j - 1) = v;
    }
};

ReferenceCheck compare_connection(const std::string& name, const std::string& symbol,
                                  const Connection& got, const Connection& want) {
    ReferenceCheck chk{name, true, ""};
    int n = got.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = j; k < n; ++k)
                if (got.at(i, j, k) != want.at(i, j, k)) {
                    chk.pass = false;
                    std::ostringstream os;
                    os << symbol << sub3(i + 1, j + 1, k + 1)
                       << ": expected " << want.at(i, j, k).str() << ", computed "
                       << got.at(i, j, k).str();
                    chk.detail = os.str();
                    return chk;
                }
    return chk;
}

// Ring with one symbolic function chain per coordinate (F1..Fn in the
// published numbering, each depending on its block's first coordinate).
struct SymSetup {
    JordanSpec spec{std::vector<int>{1}};
    RingPtr ring;
    std::vector<Polynomial> F;
    std::vector<int> dep;  // differentiation coordinate of F_i
    Polynomial a0;

    Polynomial Fd(int i, int order) const {
        Polynomial p = F[static_cast<size_t>(i - 1)];
        for (int k = 0; k < order; ++k) p = p.partial(dep[static_cast<size_t>(i - 1)]);
        return p;
    }
    RatExpr da(int i) const { return RatExpr(a0.partial(i - 1)); }
};

SymSetup make_sym(const JordanSpec& spec) {
    auto rw = std::make_shared<Ring>(spec.n());
    SymSetup s;
    s.spec = spec;
    std::vector<int> fvar;
    int idx = 1;
    for (int b = 0; b < spec.nblocks(); ++b)
        for (int i = 1; i <= spec.size(b); ++i) {
            fvar.push_back(rw->add_derivative_chain("F" + std::to_string(idx++),
                                                    spec.flat(b, 1), 4));
            s.dep.push_back(spec.flat(b, 1));
        }
    s.ring = RingPtr(rw);
    for (int v : fvar) s.F.push_back(Polynomial::variable(s.ring, v));
    A0Family fam;
    int at = 0;
    for (int b = 0; b < spec.nblocks(); ++b) {
        std::vector<Polynomial> blk(s.F.begin() + at, s.F.begin() + at + spec.size(b));
        fam.F.push_back(blk);
        at += spec.size(b);
    }
    s.a0 = build_a0(spec, fam, s.ring).value;
    return s;
}

ReferenceCheck check_a0_form(const SymSetup& s, const Polynomial& expected) {
    ReferenceCheck chk{"a0-form", true, ""};
    if (!(s.a0 == expected)) {
        chk.pass = false;
        chk.detail = "expected " + expected.str() + ", computed " + s.a0.str();
    }
    return chk;
}

// Linear a0 with one symbolic coefficient per coordinate.
struct EpsSetup {
    JordanSpec spec{std::vector<int>{1}};
    RingPtr ring;
    std::vector<RatExpr> e;  // e[i], 1-based at i-1
    Polynomial a0;
    Connection G;
    DualStructure D;
    RatExpr E(int i) const { return e[static_cast<size_t>(i - 1)]; }
};

EpsSetup make_eps(const JordanSpec& spec) {
    auto rw = std::make_shared<Ring>(spec.n());
    std::vector<int> ev;
    for (int i = 1; i <= spec.n(); ++i) ev.push_back(rw->add_symbol("e" + std::to_string(i)));
    EpsSetup s;
    s.spec = spec;
    s.ring = RingPtr(rw);
    Polynomial a0(s.ring);
    for (int i = 1; i <= spec.n(); ++i) {
        s.e.push_back(RatExpr(Polynomial::variable(s.ring, ev[static_cast<size_t>(i - 1)])));
        a0 += Polynomial::variable(s.ring, ev[static_cast<size_t>(i - 1)]) * up(s.ring, i);
    }
    s.a0 = a0;
    s.G = solve_connection(spec, a0, s.ring);
    s.D = dual_structure(spec, s.G, s.ring);
    return s;
}

ReferenceCheck check_dual_flat(const EpsSetup& s) {
    ReferenceCheck chk{"dual-flat", true, ""};
    if (!is_flat(riemann(s.D.gamma_star, s.ring))) {
        chk.pass = false;
        chk.detail = "dual Riemann tensor does not vanish";
    }
    return chk;
}

ReferenceCheck check_metric(const JordanSpec& spec, const RingPtr& ring, const Polynomial& a0m,
                            const Metric& g) {
    ReferenceCheck chk{"metric", true, ""};
    if (!g.is_symmetric()) {
        chk.pass = false;
        chk.detail = "fixture metric is not symmetric";
        return chk;
    }
    int n = spec.n();
    OneOneTensor gm(n, ring);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gm.at(i, j) = g.at(i, j);
    if (det(gm).is_zero()) {
        chk.pass = false;
        chk.detail = "fixture metric is degenerate";
        return chk;
    }
    Connection G = solve_connection(spec, a0m, ring);
    MetricReport rep = metric_checks(spec, g, G, ring);
    if (!rep.all()) {
        chk.pass = false;
        std::ostringstream os;
        os << "metric checks failed:";
        if (!rep.invariant) os << " invariance";
        if (!rep.killing) os << " killing";
        if (!rep.bridge) os << " bridge";
        chk.detail = os.str();
    }
    return chk;
}

// ----------------------------------------------------------------- case "2"

ReferenceResult case_2() {
    ReferenceResult res{"2", {}};
    JordanSpec spec({2});
    SymSetup s = make_sym(spec);
    const RingPtr& r = s.ring;
    res.checks.push_back(check_a0_form(s, s.F[0] * up(r, 2) + s.F[1]));

    {
        Connection G = solve_connection(spec, s.a0, r);
        Tbl t(2, r);
        t.set(1, 2, 2, s.da(2) / U(r, 2));
        t.set(2, 2, 2, -(s.da(1) / U(r, 2)));
        res.checks.push_back(compare_connection("christoffel", "Gamma", G, t.want));
    }
    {
        EpsSetup d = make_eps(spec);
        const RingPtr& q = d.ring;
        RatExpr one = RatExpr::constant(q, 1);
        Tbl t(2, q);
        t.set(1, 1, 1, (d.E(2) * U(q, 2) - U(q, 1)) / U(q, 1, 2));
        t.set(1, 1, 2, -(d.E(2) / U(q, 1)));
        t.set(1, 2, 2, d.E(2) / U(q, 2));
        t.set(2, 1, 1, U(q, 2) * (one - d.E(1)) / U(q, 1, 2));
        t.set(2, 1, 2, (d.E(1) - one) / U(q, 1));
        t.set(2, 2, 2, -(d.E(1) / U(q, 2)));
        res.checks.push_back(
            compare_connection("dual-christoffel", "Gamma*", d.D.gamma_star, t.want));
        res.checks.push_back(check_dual_flat(d));
    }
    {
        // epsilon_1 = -1, C1 = 2, F1(u2) = u2^2
        auto ring = make_ring(2);
        Polynomial a0m = Rational(-1) * up(ring, 1);
        Metric g(2, ring);
        g.at(0, 0) = U(ring, 2, 2);
        g.set_sym(0, 1, RatExpr::constant(ring, 2) * U(ring, 2));
        res.checks.push_back(check_metric(spec, ring, a0m, g));
    }
    return res;
}

// ----------------------------------------------------------------- case "3"

ReferenceResult case_3() {
    ReferenceResult res{"3", {}};
    JordanSpec spec({3});
    SymSetup s = make_sym(spec);
    const RingPtr& r = s.ring;
    res.checks.push_back(check_a0_form(
        s, s.F[0] * up(r, 3) + Rational(1, 2) * s.Fd(1, 1) * up(r, 2, 2) +
               s.F[1] * up(r, 2) + s.F[2]));

    {
        Connection G = solve_connection(spec, s.a0, r);
        RatExpr u2 = U(r, 2), u3 = U(r, 3);
        Tbl t(3, r);
        t.set(1, 2, 2, (s.da(2) - u3 / u2 * s.da(3)) / u2);
        RatExpr q = s.da(3) / u2;
        t.set(1, 2, 3, q);
        t.set(2, 2, 3, -(u3 / u2) * q);
        t.set(2, 3, 3, q);
        t.set(2, 2, 2, (u3 * u3 / (u2 * u2) * s.da(3) - s.da(1)) / u2);
        RatExpr g322 = u3 / (u2 * u2) * (s.da(1) - u3 / u2 * s.da(2));
        t.set(3, 2, 2, g322);
        t.set(3, 2, 3, -(u2 / u3) * g322);
        t.set(3, 3, 3, -(s.da(2) / u2));
        res.checks.push_back(compare_connection("christoffel", "Gamma", G, t.want));
    }
    {
        EpsSetup d = make_eps(spec);
        const RingPtr& q = d.ring;
        RatExpr one = RatExpr::constant(q, 1);
        RatExpr u1 = U(q, 1), u2 = U(q, 2), u3 = U(q, 3);
        RatExpr e1 = d.E(1), e2 = d.E(2), e3 = d.E(3);
        Tbl t(3, q);
        t.set(1, 1, 1, (e2 * u1 * u2 + e3 * (u1 * u3 - u2 * u2) - u1 * u1) / (u1 * u1 * u1));
        t.set(1, 1, 2, -((e2 * u1 - e3 * u2) / (u1 * u1)));
        t.set(1, 1, 3, -(e3 / u1));
        t.set(1, 2, 2, (e2 * u1 * u2 - e3 * (u1 * u3 + u2 * u2)) / (u1 * u2 * u2));
        t.set(1, 2, 3, e3 / u2);
        t.set(2, 1, 1, (one - e1) * u2 / (u1 * u1));
        t.set(3, 1, 2, (one - e1) * u2 / (u1 * u1));
        t.set(2, 1, 2, (e1 - one) / u1);
        t.set(3, 1, 3, (e1 - one) / u1);
        t.set(2, 2, 2, -((e1 * u2 * u2 - e3 * u3 * u3) / (u2 * u2 * u2)));
        t.set(2, 2, 3, -(e3 * u3 / (u2 * u2)));
        t.set(2, 3, 3, e3 / u2);
        t.set(3, 1, 1, (one - e1) * (u1 * u3 - u2 * u2) / (u1 * u1 * u1));
        t.set(3, 2, 2, (e1 * u2 * (u1 * u3 + u2 * u2) - e2 * u1 * u3 * u3 - u2 * u2 * u2) /
                           (u1 * u2 * u2 * u2));
        t.set(3, 2, 3, -((e1 * u2 - e2 * u3) / (u2 * u2)));
        t.set(3, 3, 3, -(e2 / u2));
        res.checks.push_back(
            compare_connection("dual-christoffel", "Gamma*", d.D.gamma_star, t.want));
        res.checks.push_back(check_dual_flat(d));
    }
    {
        // epsilon_1 = -3, C1 = 1, F1 = 0, F2 = 5
        auto ring = make_ring(3);
        Polynomial a0m = Rational(-3) * up(ring, 1);
        Metric g(3, ring);
        g.at(0, 0) = RatExpr::constant(ring, 3) * U(ring, 2, 2) * U(ring, 3, 2) +
                     RatExpr::constant(ring, 5);
        g.set_sym(0, 1, RatExpr::constant(ring, 2) * U(ring, 2, 3) * U(ring, 3));
        g.set_sym(0, 2, U(ring, 2, 4));
        g.at(1, 1) = U(ring, 2, 4);
        res.checks.push_back(check_metric(spec, ring, a0m, g));
    }
    return res;
}

// ---------------------------------------------------------------- case "21"

ReferenceResult case_21() {
    ReferenceResult res{"21", {}};
    JordanSpec spec({2, 1});
    SymSetup s = make_sym(spec);
    const RingPtr& r = s.ring;
    res.checks.push_back(check_a0_form(s, s.F[0] * up(r, 2) + s.F[1] + s.F[2]));

    {
        Connection G = solve_connection(spec, s.a0, r);
        RatExpr u2 = U(r, 2);
        RatExpr d13 = U(r, 1) - U(r, 3);
        Tbl t(3, r);
        RatExpr v = -(s.da(3) / d13);
        t.set(1, 1, 1, v);
        t.set(1, 1, 3, -v);
        t.set(1, 3, 3, v);
        t.set(2, 1, 1, -(v * u2 / d13));
        t.set(2, 1, 2, v);
        t.set(2, 1, 3, v * u2 / d13);
        t.set(2, 2, 3, -v);
        t.set(2, 3, 3, -(v * u2 / d13));
        RatExpr w = s.da(2) / u2;
        t.set(1, 2, 2, w);
        t.set(3, 1, 2, w * u2 / d13);
        t.set(3, 2, 3, -(w * u2 / d13));
        t.set(2, 2, 2, -(s.da(1) / u2));
        RatExpr z = (s.da(1) - u2 * s.da(2) / d13) / d13;
        t.set(3, 1, 1, z);
        t.set(3, 1, 3, -z);
        t.set(3, 3, 3, z);
        res.checks.push_back(compare_connection("christoffel", "Gamma", G, t.want));
    }
    {
        EpsSetup d = make_eps(spec);
        const RingPtr& q = d.ring;
        RatExpr one = RatExpr::constant(q, 1);
        RatExpr u1 = U(q, 1), u2 = U(q, 2), u3 = U(q, 3);
        RatExpr e1 = d.E(1), e2 = d.E(2), e3 = d.E(3);
        RatExpr d13 = u1 - u3;
        Tbl t(3, q);
        t.set(1, 1, 1,
              (e2 * u2 * d13 - e3 * u1 * u3 - u1 * u1 + u1 * u3) / (u1 * u1 * d13));
        t.set(1, 1, 2, -(e2 / u1));
        t.set(1, 1, 3, e3 / d13);
        t.set(1, 2, 2, e2 / u2);
        t.set(1, 3, 3, -(e3 * u1 / (u3 * d13)));
        t.set(2, 1, 1,
              -(((e1 - one) * d13 * d13 - e3 * u3 * (U(q, 1, 1) * 2 - u3)) * u2 /
                (u1 * u1 * d13 * d13)));
        t.set(2, 1, 2, (e1 * d13 - e3 * u3 - u1 + u3) / (u1 * d13));
        t.set(2, 2, 2, -(e1 / u2));
        t.set(2, 2, 3, e3 / d13);
        t.set(2, 1, 3, -(e3 * u2 / (d13 * d13)));
        t.set(2, 3, 3, e3 * u2 / (d13 * d13));
        t.set(3, 1, 1,
              (e1 * u1 * d13 - e2 * u2 * (RatExpr::constant(q, 2) * u1 - u3)) * u3 /
                  (u1 * u1 * d13 * d13));
        t.set(3, 1, 2, e2 * u3 / (u1 * d13));
        t.set(3, 1, 3, -((e1 * d13 - e2 * u2) / (d13 * d13)));
        t.set(3, 2, 3, -(e2 / d13));
        t.set(3, 3, 3, (e1 * u1 * d13 - e2 * u2 * u3 - d13 * d13) / (u3 * d13 * d13));
        res.checks.push_back(
            compare_connection("dual-christoffel", "Gamma*", d.D.gamma_star, t.want));
        res.checks.push_back(check_dual_flat(d));
    }
    {
        // epsilon_1 = epsilon_3 = -1, C1 = 2, C2 = 1, F1(u2) = u2
        auto ring = make_ring(3);
        Polynomial a0m = Rational(-1) * up(ring, 1) + Rational(-1) * up(ring, 3);
        RatExpr d31 = U(ring, 3) - U(ring, 1);
        Metric g(3, ring);
        g.at(0, 0) = U(ring, 2) * d31 * d31 +
                     RatExpr::constant(ring, 2) * U(ring, 2, 2) * d31;
        g.set_sym(0, 1, -(U(ring, 2) * d31 * d31));
        g.at(2, 2) = d31 * d31;
        res.checks.push_back(check_metric(spec, ring, a0m, g));
    }
    return res;
}

// ----------------------------------------------------------------- case "4"

ReferenceResult case_4() {
    ReferenceResult res{"4", {}};
    JordanSpec spec({4});
    SymSetup s = make_sym(spec);
    const RingPtr& r = s.ring;
    res.checks.push_back(check_a0_form(
        s, (s.Fd(1, 1) * up(r, 2) + s.F[1]) * up(r, 3) + s.F[0] * up(r, 4) +
               Rational(1, 6) * s.Fd(1, 2) * up(r, 2, 3) +
               Rational(1, 2) * s.Fd(2, 1) * up(r, 2, 2) + s.F[2] * up(r, 2) + s.F[3]));

    {
        Connection G = solve_connection(spec, s.a0, r);
        RatExpr u2 = U(r, 2), u3 = U(r, 3), u4 = U(r, 4);
        RatExpr two = RatExpr::constant(r, 2), three = RatExpr::constant(r, 3);
        Tbl t(4, r);
        t.set(1, 2, 2,
              (s.da(2) - u3 / u2 * s.da(3) + (u3 * u3 / u2 - u4) / u2 * s.da(4)) / u2);
        t.set(1, 2, 3, (s.da(3) - u3 / u2 * s.da(4)) / u2);
        RatExpr tq = s.da(4) / u2;
        t.set(1, 2, 4, tq);
        t.set(1, 3, 3, tq);
        t.set(2, 2, 4, -(u3 / u2) * tq);
        t.set(2, 3, 4, tq);
        t.set(3, 2, 4, (u3 * u3 - u2 * u4) / (u2 * u2) * tq);
        t.set(3, 3, 4, -(u3 / u2) * tq);
        t.set(3, 4, 4, tq);
        t.set(2, 2, 2,
              (-s.da(1) + u3 * u3 / (u2 * u2) * s.da(3) +
               two * u3 / (u2 * u2) * (u4 - u3 * u3 / u2) * s.da(4)) /
                  u2);
        t.set(2, 2, 3,
              (-(u3 * s.da(3)) + (two * u3 * u3 / u2 - u4) * s.da(4)) / (u2 * u2));
        t.set(2, 3, 3, (s.da(3) - two * u3 / u2 * s.da(4)) / u2);
        t.set(3, 2, 2,
              (u3 * s.da(1) - u3 * u3 / u2 * s.da(2) +
               (two * u3 * u3 * u3 * u3 / (u2 * u2) - three * u3 * u3 * u4 / u2 +
                u4 * u4) /
                   u2 * s.da(4)) /
                  (u2 * u2));
        t.set(3, 2, 3,
              (-s.da(1) + u3 / u2 * s.da(2) +
               two * u3 / (u2 * u2) * (u4 - u3 * u3 / u2) * s.da(4)) /
                  u2);
        t.set(3, 3, 3,
              (-s.da(2) + (two * u3 * u3 / u2 - u4) / u2 * s.da(4)) / u2);
        t.set(4, 2, 2,
              (u2 * u4 - u3 * u3) / (u2 * u2 * u2) *
                  (s.da(1) - two * u3 / u2 * s.da(2) +
                   (two * u3 * u3 / u2 - u4) / u2 * s.da(3)));
        t.set(4, 2, 3,
              (u3 * s.da(1) + (u4 - two * u3 * u3 / u2) * s.da(2) +
               two / u2 * (u3 * u3 * u3 / u2 - u3 * u4) * s.da(3)) /
                  (u2 * u2));
        t.set(4, 2, 4,
              (-s.da(1) + u3 / u2 * s.da(2) + (u4 - u3 * u3 / u2) / u2 * s.da(3)) / u2);
        t.set(4, 3, 3,
              (-s.da(1) + two * u3 / u2 * s.da(2) + (u4 - two * u3 * u3 / u2) / u2 * s.da(3)) /
                  u2);
        t.set(4, 3, 4, (-s.da(2) + u3 / u2 * s.da(3)) / u2);
        t.set(4, 4, 4, -(s.da(3) / u2));
        res.checks.push_back(compare_connection("christoffel", "Gamma", G, t.want));
    }
    {
        EpsSetup d = make_eps(spec);
        const RingPtr& q = d.ring;
        RatExpr one = RatExpr::constant(q, 1), two = RatExpr::constant(q, 2);
        RatExpr u1 = U(q, 1), u2 = U(q, 2), u3 = U(q, 3), u4 = U(q, 4);
        RatExpr e1 = d.E(1), e2 = d.E(2), e3 = d.E(3), e4 = d.E(4);
        RatExpr u1_2 = u1 * u1, u2_2 = u2 * u2, u3_2 = u3 * u3;
        RatExpr w = u2 * u4 - u3_2;  // recurring combination
        Tbl t(4, q);
        t.set(1, 1, 1,
              (e2 * u1_2 * u2 + e3 * u1 * (u1 * u3 - u2_2) +
               e4 * (u1_2 * u4 - two * u1 * u2 * u3 + u2 * u2_2) - u1 * u1_2) /
                  (u1_2 * u1_2));
        t.set(1, 1, 2, -((e2 * u1_2 - e3 * u1 * u2 - e4 * (u1 * u3 - u2_2)) / (u1_2 * u1)));
        t.set(1, 1, 3, -((e3 * u1 - e4 * u2) / u1_2));
        t.set(1, 1, 4, -(e4 / u1));
        t.set(1, 2, 2,
              (e2 * u1_2 * u2_2 - e3 * u1 * u2 * (u1 * u3 + u2_2) -
               e4 * (u1_2 * w - u2_2 * u2_2)) /
                  (u1_2 * u2 * u2_2));
        t.set(1, 2, 3, (e3 * u1 * u2 - e4 * (u1 * u3 + u2_2)) / (u1 * u2_2));
        t.set(1, 2, 4, e4 / u2);
        t.set(1, 3, 3, e4 / u2);
        t.set(2, 3, 4, e4 / u2);
        t.set(3, 4, 4, e4 / u2);
        t.set(2, 1, 1, (one - e1) * u2 / u1_2);
        t.set(3, 1, 2, (one - e1) * u2 / u1_2);
        t.set(4, 1, 3, (one - e1) * u2 / u1_2);
        t.set(2, 1, 2, (e1 - one) / u1);
        t.set(3, 1, 3, (e1 - one) / u1);
        t.set(4, 1, 4, (e1 - one) / u1);
        RatExpr g222 =
            -((e1 * u2 * u2_2 - e3 * u2 * u3_2 - two * e4 * u3 * w) / (u2_2 * u2_2));
        t.set(2, 2, 2, g222);
        t.set(3, 2, 3,
              -((e1 * u2 * u2_2 - e2 * u2_2 * u3 - two * e4 * u3 * w) / (u2_2 * u2_2)));
        t.set(2, 2, 3, -((e3 * u2 * u3 + e4 * (w - u3_2)) / (u2 * u2_2)));
        t.set(2, 2, 4, -(e4 * u3 / u2_2));
        t.set(3, 3, 4, -(e4 * u3 / u2_2));
        t.set(2, 3, 3, (e3 * u2 - two * e4 * u3) / u2_2);
        t.set(3, 1, 1, (one - e1) * (u1 * u3 - u2_2) / (u1_2 * u1));
        t.set(4, 1, 2, (one - e1) * (u1 * u3 - u2_2) / (u1_2 * u1));
        t.set(3, 2, 2,
              (e1 * u2 * u2_2 * (u1 * u3 + u2_2) - e2 * u1 * u2_2 * u3_2 +
               e4 * u1 * w * (w - u3_2) - u2 * u2_2 * u2_2) /
                  (u1 * u2 * u2_2 * u2_2));
        t.set(3, 2, 4, -(e4 * w / (u2 * u2_2)));
        t.set(3, 3, 3, -((e2 * u2_2 + e4 * (w - u3_2)) / (u2 * u2_2)));
        t.set(4, 1, 1, (one - e1) * (u1_2 * u4 - two * u1 * u2 * u3 + u2 * u2_2) /
                           (u1_2 * u1_2));
        t.set(4, 2, 2,
              (e1 * u1_2 * u2 * u2_2 * u4 - e1 * u2_2 * (u1_2 * u3_2 + u2_2 * u2_2) -
               two * e2 * u1_2 * u2 * u3 * w - e3 * u1_2 * w * (w - u3_2) +
               u2_2 * u2_2 * u2_2) /
                  (u1_2 * u2 * u2_2 * u2_2));
        t.set(4, 2, 3,
              (e1 * u2_2 * (u1 * u3 + u2_2) + e2 * u1 * u2 * (w - u3_2) -
               two * e3 * u1 * u3 * w - u2_2 * u2_2) /
                  (u1 * u2_2 * u2_2));
        t.set(4, 2, 4, -((e1 * u2_2 - e2 * u2 * u3 - e3 * w) / (u2 * u2_2)));
        t.set(4, 3, 3, -((e1 * u2_2 - two * e2 * u2 * u3 - e3 * (w - u3_2)) / (u2 * u2_2)));
        t.set(4, 3, 4, -((e2 * u2 - e3 * u3) / u2_2));
        t.set(4, 4, 4, -(e3 / u2));
        res.checks.push_back(
            compare_connection("dual-christoffel", "Gamma*", d.D.gamma_star, t.want));
        res.checks.push_back(check_dual_flat(d));
    }
    {
        // epsilon_1 = -2, C1 = 1, F1 = u2^2, F2 = u2, F3 = 1
        auto ring = make_ring(4);
        Polynomial a0m = Rational(-2) * up(ring, 1);
        RatExpr u2 = U(ring, 2), u3 = U(ring, 3), u4 = U(ring, 4);
        RatExpr c = RatExpr::constant(ring, 1);
        Metric g(4, ring);
        g.at(0, 0) = RatExpr::constant(ring, 4) * u2 * u3 * u4 +
                     RatExpr::constant(ring, 2) * u3 * u3 -
                     RatExpr::constant(ring, 2) * u2 * u4 -
                     RatExpr::constant(ring, 2) * u3 + c;
        g.set_sym(0, 1, RatExpr::constant(ring, 2) * u2 * u3 * u3 + u2 * u2 * u4 + u2);
        RatExpr g13 = RatExpr::constant(ring, 2) * u2 * u2 * u3 + u2 * u2;
        g.set_sym(0, 2, g13);
        g.at(1, 1) = g13;
        RatExpr g14 = u2 * u2 * u2;
        g.set_sym(0, 3, g14);
        g.set_sym(1, 2, g14);
        res.checks.push_back(check_metric(spec, ring, a0m, g));
    }
    return res;
}

// ---------------------------------------------------------------- case "31"

ReferenceResult case_31() {
    ReferenceResult res{"31", {}};
    JordanSpec spec({3, 1});
    SymSetup s = make_sym(spec);
    const RingPtr& r = s.ring;
    res.checks.push_back(check_a0_form(
        s, s.F[0] * up(r, 3) + Rational(1, 2) * s.Fd(1, 1) * up(r, 2, 2) +
               s.F[1] * up(r, 2) + s.F[2] + s.F[3]));

    {
        Connection G = solve_connection(spec, s.a0, r);
        RatExpr u2 = U(r, 2), u3 = U(r, 3);
        RatExpr d14 = U(r, 1) - U(r, 4);
        RatExpr h = u3 * d14 - u2 * u2;  // recurring combination
        Tbl t(4, r);
        RatExpr p = -(s.da(4) / d14);
        t.set(1, 1, 1, p);
        t.set(1, 1, 4, -p);
        t.set(1, 4, 4, p);
        t.set(2, 1, 1, -(u2 * p / d14));
        t.set(2, 1, 2, p);
        t.set(2, 1, 4, u2 * p / d14);
        t.set(2, 2, 4, -p);
        t.set(2, 4, 4, -(u2 * p / d14));
        t.set(3, 1, 1, -(h * p / (d14 * d14)));
        t.set(3, 1, 2, -(u2 * p / d14));
        t.set(3, 1, 3, p);
        t.set(3, 1, 4, h * p / (d14 * d14));
        t.set(3, 2, 4, u2 * p / d14);
        t.set(3, 3, 4, -p);
        t.set(3, 4, 4, -(h * p / (d14 * d14)));
        t.set(1, 2, 2, (s.da(2) - u3 / u2 * s.da(3)) / u2);
        RatExpr q = s.da(3) / u2;
        t.set(1, 2, 3, q);
        t.set(2, 2, 3, -(u3 / u2) * q);
        t.set(2, 3, 3, q);
        t.set(4, 1, 3, u2 * q / d14);
        t.set(4, 2, 2, u2 * q / d14);
        t.set(4, 3, 4, -(u2 * q / d14));
        t.set(2, 2, 2, (-s.da(1) + u3 * u3 / (u2 * u2) * s.da(3)) / u2);
        t.set(3, 2, 2, u3 / (u2 * u2) * (s.da(1) - u3 / u2 * s.da(2)) - s.da(4) / d14);
        t.set(3, 2, 3, (-s.da(1) + u3 / u2 * s.da(2)) / u2);
        t.set(3, 3, 3, -(s.da(2) / u2));
        RatExpr z = (s.da(1) - u2 / d14 * s.da(2) - h / (d14 * d14) * s.da(3)) / d14;
        t.set(4, 1, 1, z);
        t.set(4, 1, 4, -z);
        t.set(4, 4, 4, z);
        RatExpr y = (s.da(2) - u2 / d14 * s.da(3)) / d14;
        t.set(4, 1, 2, y);
        t.set(4, 2, 4, -y);
        res.checks.push_back(compare_connection("christoffel", "Gamma", G, t.want));
    }
    {
        EpsSetup d = make_eps(spec);
        const RingPtr& q = d.ring;
        RatExpr one = RatExpr::constant(q, 1), two = RatExpr::constant(q, 2);
        RatExpr u1 = U(q, 1), u2 = U(q, 2), u3 = U(q, 3), u4 = U(q, 4);
        RatExpr e1 = d.E(1), e2 = d.E(2), e3 = d.E(3), e4 = d.E(4);
        RatExpr d14 = u1 - u4;
        RatExpr d2 = d14 * d14, d3 = d14 * d14 * d14;
        RatExpr u1_2 = u1 * u1, u2_2 = u2 * u2;
        RatExpr m = u1 * u3 - u2_2;  // recurring combination
        Tbl t(4, q);
        t.set(1, 1, 1,
              (e2 * u1 * u2 * d14 + e3 * m * d14 - e4 * u1_2 * u4 - u1 * u1_2 +
               u1_2 * u4) /
                  (u1 * u1_2 * d14));
        t.set(1, 1, 2, -((e2 * u1 - e3 * u2) / u1_2));
        t.set(1, 1, 3, -(e3 / u1));
        t.set(1, 1, 4, e4 / d14);
        t.set(1, 2, 2, (e2 * u1 * u2 - e3 * (u1 * u3 + u2_2)) / (u1 * u2_2));
        t.set(1, 2, 3, e3 / u2);
        t.set(1, 4, 4, -(e4 * u1 / (u4 * d14)));
        RatExpr g211 = -(u2 * (e1 * d2 - e4 * u4 * (two * u1 - u4) - d2) / (u1_2 * d2));
        t.set(2, 1, 1, g211);
        t.set(3, 1, 2, g211);
        t.set(2, 1, 2, (e1 * d14 - e4 * u4 - d14) / (u1 * d14));
        t.set(2, 1, 4, -(e4 * u2 / d2));
        t.set(2, 2, 2, -((e1 * u2_2 - e3 * u3 * u3) / (u2 * u2_2)));
        t.set(2, 2, 3, -(e3 * u3 / u2_2));
        t.set(2, 2, 4, e4 / d14);
        t.set(3, 3, 4, e4 / d14);
        t.set(2, 3, 3, e3 / u2);
        t.set(2, 4, 4, e4 * u2 / d2);
        t.set(3, 1, 1,
              -(((e1 - one) * m * d3 +
                 e4 * u4 *
                     (u2_2 * (u4 * u4 - RatExpr::constant(q, 3) * u1 * u4 +
                              RatExpr::constant(q, 3) * u1_2) -
                      u1 * u3 * (u4 - u1) * (u4 - two * u1))) /
                (u1 * u1_2 * d3)));
        t.set(3, 2, 2,
              (e1 * u2 * d14 * (u1 * u3 + u2_2) - e2 * u1 * u3 * u3 * d14 -
               e4 * u2 * u2_2 * u4 - u2 * u2_2 * d14) /
                  (u1 * u2 * u2_2 * d14));
        t.set(3, 2, 3, -((e1 * u2 - e2 * u3) / u2_2));
        t.set(3, 1, 3, ((e1 - one) * d14 - e4 * u4) / (u1 * d14));
        t.set(3, 1, 4, -(e4 * (u3 * d14 - u2_2) / d3));
        t.set(3, 2, 4, -(e4 * u2 / d2));
        t.set(3, 3, 3, -(e2 / u2));
        t.set(3, 4, 4, e4 * (u3 * d14 - u2_2) / d3);
        t.set(4, 1, 1,
              u4 *
                  (e1 * u1_2 * d2 - e2 * u1 * u2 * d14 * (two * u1 - u4) -
                   e3 * (u1 * u3 * (u4 - u1) * (u4 - two * u1) -
                         u2_2 * (u4 * u4 - RatExpr::constant(q, 3) * u1 * u4 +
                                 RatExpr::constant(q, 3) * u1_2))) /
                  (u1 * u1_2 * d3));
        t.set(4, 1, 2, u4 * (e2 * u1 * d14 - e3 * u2 * (two * u1 - u4)) / (u1_2 * d2));
        t.set(4, 1, 3, e3 * u4 / (u1 * d14));
        t.set(4, 2, 2, e3 * u4 / (u1 * d14));
        t.set(4, 1, 4, -((e1 * d2 - e2 * u2 * d14 - e3 * (m - u3 * u4)) / d3));
        t.set(4, 2, 4, -((e2 * d14 - e3 * u2) / d2));
        t.set(4, 3, 4, -(e3 / d14));
        t.set(4, 4, 4,
              (e1 * u1 * d2 - e2 * u2 * u4 * d14 - e3 * u4 * (u3 * d14 - u2_2) - d3) /
                  (u4 * d3));
        res.checks.push_back(
            compare_connection("dual-christoffel", "Gamma*", d.D.gamma_star, t.want));
        res.checks.push_back(check_dual_flat(d));
    }
    {
        // epsilon_1 = -3, epsilon_4 = -1, C1 = C2 = 1, F1 = F2 = 0
        auto ring = make_ring(4);
        Polynomial a0m = Rational(-3) * up(ring, 1) + Rational(-1) * up(ring, 4);
        RatExpr u2 = U(ring, 2), u3 = U(ring, 3);
        RatExpr d14 = U(ring, 1) - U(ring, 4);
        Metric g(4, ring);
        g.at(0, 0) = RatExpr::constant(ring, 3) * u2 * u2 * u3 * u3 * d14 * d14 +
                     RatExpr::constant(ring, 6) * U(ring, 2, 4) * u3 * d14 + U(ring, 2, 6);
        g.set_sym(0, 1, RatExpr::constant(ring, 2) * U(ring, 2, 5) * d14 +
                            RatExpr::constant(ring, 2) * U(ring, 2, 3) * u3 * d14 * d14);
        RatExpr g13 = U(ring, 2, 4) * d14 * d14;
        g.set_sym(0, 2, g13);
        g.at(1, 1) = g13;
        g.at(3, 3) = d14 * d14 * d14 * d14 * d14 * d14;
        res.checks.push_back(check_metric(spec, ring, a0m, g));
    }
    return res;
}

// ---------------------------------------------------------------- case "22"

ReferenceResult case_22() {
    ReferenceResult res{"22", {}};
    JordanSpec spec({2, 2});
    SymSetup s = make_sym(spec);
    const RingPtr& r = s.ring;
    res.checks.push_back(
        check_a0_form(s, s.F[0] * up(r, 2) + s.F[1] + s.F[2] * up(r, 4) + s.F[3]));

    {
        Connection G = solve_connection(spec, s.a0, r);
        RatExpr u2 = U(r, 2), u4 = U(r, 4);
        RatExpr d13 = U(r, 1) - U(r, 3);
        Tbl t(4, r);
        RatExpr A = -((s.da(3) + u4 / d13 * s.da(4)) / d13);
        t.set(1, 1, 1, A);
        t.set(1, 1, 3, -A);
        t.set(1, 3, 3, A);
        t.set(2, 1, 2, A);
        t.set(2, 2, 3, -A);
        RatExpr B = s.da(4) / d13;
        t.set(1, 1, 4, B);
        t.set(1, 3, 4, -B);
        t.set(2, 1, 4, -(u2 * B / d13));
        t.set(2, 2, 4, B);
        t.set(2, 3, 4, u2 * B / d13);
        t.set(3, 4, 4, s.da(4) / u4);
        RatExpr C = s.da(2) / u2;
        t.set(1, 2, 2, C);
        t.set(3, 1, 2, u2 * C / d13);
        t.set(3, 2, 3, -(u2 * C / d13));
        t.set(4, 1, 2, u2 * u4 * C / (d13 * d13));
        t.set(4, 2, 3, -(u2 * u4 * C / (d13 * d13)));
        t.set(4, 2, 4, -(u2 * C / d13));
        RatExpr Dv = u2 / (d13 * d13) * (s.da(3) + RatExpr::constant(r, 2) * u4 / d13 * s.da(4));
        t.set(2, 1, 1, Dv);
        t.set(2, 1, 3, -Dv);
        t.set(2, 3, 3, Dv);
        t.set(2, 2, 2, -(s.da(1) / u2));
        RatExpr Ez = (s.da(1) - u2 / d13 * s.da(2)) / d13;
        t.set(3, 1, 1, Ez);
        t.set(3, 1, 3, -Ez);
        t.set(3, 3, 3, Ez);
        t.set(4, 1, 4, -Ez);
        t.set(4, 3, 4, Ez);
        RatExpr Fz = u4 / (d13 * d13) *
                     (s.da(1) - RatExpr::constant(r, 2) * u2 / d13 * s.da(2));
        t.set(4, 1, 1, Fz);
        t.set(4, 1, 3, -Fz);
        t.set(4, 3, 3, Fz);
        t.set(4, 4, 4, -(s.da(3) / u4));
        res.checks.push_back(compare_connection("christoffel", "Gamma", G, t.want));
    }
    {
        EpsSetup d = make_eps(spec);
        const RingPtr& q = d.ring;
        RatExpr one = RatExpr::constant(q, 1), two = RatExpr::constant(q, 2);
        RatExpr u1 = U(q, 1), u2 = U(q, 2), u3 = U(q, 3), u4 = U(q, 4);
        RatExpr e1 = d.E(1), e2 = d.E(2), e3 = d.E(3), e4 = d.E(4);
        RatExpr d13 = u1 - u3;
        RatExpr d2 = d13 * d13, d3 = d13 * d13 * d13;
        RatExpr u1_2 = u1 * u1, u3_2 = u3 * u3;
        Tbl t(4, q);
        t.set(1, 1, 1,
              ((e2 * u2 - u1) * d2 - e3 * u1 * u3 * d13 - e4 * u1_2 * u4) / (u1_2 * d2));
        t.set(1, 1, 2, -(e2 / u1));
        t.set(1, 1, 3, (e3 * d13 + e4 * u4) / d2);
        t.set(2, 2, 3, (e3 * d13 + e4 * u4) / d2);
        t.set(1, 1, 4, e4 / d13);
        t.set(2, 2, 4, e4 / d13);
        t.set(1, 2, 2, e2 / u2);
        t.set(1, 3, 3, -(u1 * (e3 * u3 * d13 - e4 * u4 * (u1 - two * u3)) / (u3_2 * d2)));
        t.set(1, 3, 4, -(e4 * u1 / (u3 * d13)));
        t.set(2, 1, 1,
              -(u2 * ((e1 - one) * d3 - e3 * u3 * (d2 + u1 * d13) - two * e4 * u1_2 * u4) /
                (u1_2 * d3)));
        t.set(2, 1, 2, ((e1 - one) * d2 - e3 * u3 * d13 - e4 * u1 * u4) / (u1 * d2));
        RatExpr g213 = -(u2 * (e3 * d13 + two * e4 * u4) / d3);
        t.set(2, 1, 3, g213);
        t.set(2, 3, 3, -g213);
        t.set(2, 1, 4, -(e4 * u2 / d2));
        t.set(2, 3, 4, e4 * u2 / d2);
        t.set(2, 2, 2, -(e1 / u2));
        t.set(3, 1, 1, u3 * (e1 * u1 * d13 - e2 * u2 * (two * u1 - u3)) / (u1_2 * d2));
        t.set(3, 1, 2, e2 * u3 / (u1 * d13));
        t.set(3, 1, 3, -((e1 * d13 - e2 * u2) / d2));
        t.set(3, 2, 3, -(e2 / d13));
        t.set(4, 2, 4, -(e2 / d13));
        t.set(3, 3, 3,
              (e1 * u1 * u3 * d13 - e2 * u2 * u3_2 + (e4 * u4 - u3) * d2) / (u3_2 * d2));
        t.set(3, 3, 4, -(e4 / u3));
        t.set(3, 4, 4, e4 / u4);
        RatExpr g411 = u4 * (e1 * d13 - two * e2 * u2) / d3;
        t.set(4, 1, 1, g411);
        t.set(4, 1, 3, -g411);
        t.set(4, 1, 2, e2 * u4 / d2);
        t.set(4, 2, 3, -(e2 * u4 / d2));
        t.set(4, 1, 4, -((e1 * d13 - e2 * u2) / d2));
        t.set(4, 3, 3,
              -(u4 * (e1 * u1 * (d2 - u3 * d13) + two * e2 * u2 * u3_2 + (e3 - one) * d3) /
                (u3_2 * d3)));
        t.set(4, 3, 4, (e1 * u1 * d13 - e2 * u2 * u3 + (e3 - one) * d2) / (u3 * d2));
        t.set(4, 4, 4, -(e3 / u4));
        res.checks.push_back(
            compare_connection("dual-christoffel", "Gamma*", d.D.gamma_star, t.want));
        res.checks.push_back(check_dual_flat(d));
    }
    {
        // epsilon_1 = epsilon_3 = -1, C1 = C2 = 2, F1 = F2 = 0
        auto ring = make_ring(4);
        Polynomial a0m = Rational(-1) * up(ring, 1) + Rational(-1) * up(ring, 3);
        RatExpr u2 = U(ring, 2), u4 = U(ring, 4);
        RatExpr d31 = U(ring, 3) - U(ring, 1);
        Metric g(4, ring);
        g.at(0, 0) = RatExpr::constant(ring, 2) * u2 * u2 * d31;
        g.set_sym(0, 1, -(u2 * d31 * d31));
        g.at(2, 2) = RatExpr::constant(ring, 2) * u4 * u4 * d31;
        g.set_sym(2, 3, u4 * d31 * d31);
        res.checks.push_back(check_metric(spec, ring, a0m, g));
    }
    return res;
}

// --------------------------------------------------------------- case "211"

ReferenceResult case_211() {
    ReferenceResult res{"211", {}};
    JordanSpec spec({2, 1, 1});
    SymSetup s = make_sym(spec);
    const RingPtr& r = s.ring;
    res.checks.push_back(
        check_a0_form(s, s.F[0] * up(r, 2) + s.F[1] + s.F[2] + s.F[3]));

    {
        Connection G = solve_connection(spec, s.a0, r);
        RatExpr u2 = U(r, 2);
        RatExpr d13 = U(r, 1) - U(r, 3), d14 = U(r, 1) - U(r, 4), d34 = U(r, 3) - U(r, 4);
        Tbl t(4, r);
        t.set(1, 1, 1, -(s.da(3) / d13 + s.da(4) / d14));
        t.set(2, 1, 2, -(s.da(3) / d13 + s.da(4) / d14));
        RatExpr P = s.da(3) / d13;
        t.set(1, 1, 3, P);
        t.set(1, 3, 3, -P);
        t.set(2, 2, 3, P);
        t.set(2, 1, 3, -(u2 * P / d13));
        t.set(2, 3, 3, u2 * P / d13);
        t.set(4, 3, 3, s.da(3) / d34);
        t.set(4, 3, 4, -(s.da(3) / d34));
        RatExpr Q = s.da(4) / d14;
        t.set(1, 1, 4, Q);
        t.set(1, 4, 4, -Q);
        t.set(2, 2, 4, Q);
        t.set(2, 1, 4, -(u2 * Q / d14));
        t.set(2, 4, 4, u2 * Q / d14);
        t.set(3, 3, 4, s.da(4) / d34);
        t.set(3, 4, 4, -(s.da(4) / d34));
        RatExpr W = s.da(2) / u2;
        t.set(1, 2, 2, W);
        t.set(3, 1, 2, u2 * W / d13);
        t.set(3, 2, 3, -(u2 * W / d13));
        t.set(4, 1, 2, u2 * W / d14);
        t.set(4, 2, 4, -(u2 * W / d14));
        t.set(2, 1, 1, u2 * (s.da(3) / (d13 * d13) + s.da(4) / (d14 * d14)));
        t.set(2, 2, 2, -(s.da(1) / u2));
        RatExpr z3 = (s.da(1) - u2 / d13 * s.da(2)) / d13;
        t.set(3, 1, 1, z3);
        t.set(3, 1, 3, -z3);
        t.set(3, 3, 3, z3 - s.da(4) / d34);
        RatExpr z4 = (s.da(1) - u2 / d14 * s.da(2)) / d14;
        t.set(4, 1, 1, z4);
        t.set(4, 1, 4, -z4);
        t.set(4, 4, 4, z4 + s.da(3) / d34);
        res.checks.push_back(compare_connection("christoffel", "Gamma", G, t.want));
    }
    {
        EpsSetup d = make_eps(spec);
        const RingPtr& q = d.ring;
        RatExpr one = RatExpr::constant(q, 1), two = RatExpr::constant(q, 2);
        RatExpr u1 = U(q, 1), u2 = U(q, 2), u3 = U(q, 3), u4 = U(q, 4);
        RatExpr e1 = d.E(1), e2 = d.E(2), e3 = d.E(3), e4 = d.E(4);
        RatExpr d13 = u1 - u3, d14 = u1 - u4, d34 = u3 - u4;
        RatExpr u1_2 = u1 * u1;
        Tbl t(4, q);
        t.set(1, 1, 1,
              (e2 * u2 * d13 * d14 - e3 * u1 * u3 * d14 - e4 * u1 * u4 * d13 -
               u1 * d13 * d14) /
                  (u1_2 * d13 * d14));
        t.set(1, 1, 2, -(e2 / u1));
        t.set(1, 1, 3, e3 / d13);
        t.set(2, 2, 3, e3 / d13);
        t.set(1, 1, 4, e4 / d14);
        t.set(2, 2, 4, e4 / d14);
        t.set(1, 2, 2, e2 / u2);
        t.set(1, 3, 3, -(e3 * u1 / (u3 * d13)));
        t.set(1, 4, 4, -(e4 * u1 / (u4 * d14)));
        t.set(2, 1, 1,
              -(u2 *
                ((e1 - one) * d13 * d13 * d14 * d14 -
                 e3 * u3 * (two * u1 - u3) * d14 * d14 -
                 e4 * u4 * (two * u1 - u4) * d13 * d13) /
                (u1_2 * d13 * d13 * d14 * d14)));
        t.set(2, 1, 2,
              ((e1 - one) * d13 * d14 - e3 * u3 * d14 - e4 * u4 * d13) / (u1 * d13 * d14));
        t.set(2, 2, 2, -(e1 / u2));
        t.set(2, 1, 3, -(e3 * u2 / (d13 * d13)));
        t.set(2, 1, 4, -(e4 * u2 / (d14 * d14)));
        t.set(2, 3, 3, e3 * u2 / (d13 * d13));
        t.set(2, 4, 4, e4 * u2 / (d14 * d14));
        t.set(3, 1, 1, u3 * (e1 * u1 * d13 - e2 * u2 * (two * u1 - u3)) / (u1_2 * d13 * d13));
        t.set(3, 1, 2, e2 * u3 / (u1 * d13));
        t.set(3, 1, 3, -((e1 * d13 - e2 * u2) / (d13 * d13)));
        t.set(3, 2, 3, -(e2 / d13));
        t.set(3, 3, 3,
              (e1 * u1 * d13 * d34 - e2 * u2 * u3 * d34 - e4 * u4 * d13 * d13 -
               d13 * d13 * d34) /
                  (u3 * d13 * d13 * d34));
        t.set(3, 3, 4, e4 / d34);
        t.set(3, 4, 4, -(e4 * u3 / (u4 * d34)));
        t.set(4, 1, 1, u4 * (e1 * u1 * d14 - e2 * u2 * (two * u1 - u4)) / (u1_2 * d14 * d14));
        t.set(4, 1, 2, e2 * u4 / (u1 * d14));
        t.set(4, 1, 4, -((e1 * d14 - e2 * u2) / (d14 * d14)));
        t.set(4, 2, 4, -(e2 / d14));
        t.set(4, 3, 3, e3 * u4 / (u3 * d34));
        t.set(4, 3, 4, -(e3 / d34));
        t.set(4, 4, 4,
              (e1 * u1 * d14 * d34 - e2 * u2 * u4 * d34 + e3 * u3 * d14 * d14 -
               d14 * d14 * d34) /
                  (u4 * d14 * d14 * d34));
        res.checks.push_back(
            compare_connection("dual-christoffel", "Gamma*", d.D.gamma_star, t.want));
        res.checks.push_back(check_dual_flat(d));
    }
    {
        // epsilon_1 = epsilon_3 = epsilon_4 = -1, C1 = 2, C2 = C3 = 1, F1 = 0
        auto ring = make_ring(4);
        Polynomial a0m = Rational(-1) * up(ring, 1) + Rational(-1) * up(ring, 3) +
                         Rational(-1) * up(ring, 4);
        RatExpr u2 = U(ring, 2);
        RatExpr d13 = U(ring, 1) - U(ring, 3), d41 = U(ring, 4) - U(ring, 1),
                d34 = U(ring, 3) - U(ring, 4);
        Metric g(4, ring);
        g.at(0, 0) = RatExpr::constant(ring, -2) * u2 * u2 * d13 * d41 * d41 +
                     RatExpr::constant(ring, 2) * u2 * u2 * d13 * d13 * d41;
        g.set_sym(0, 1, -(u2 * d13 * d13 * d41 * d41));
        g.at(2, 2) = d34 * d34 * d13 * d13;
        g.at(3, 3) = d34 * d34 * (U(ring, 1) - U(ring, 4)) * (U(ring, 1) - U(ring, 4));
        res.checks.push_back(check_metric(spec, ring, a0m, g));
    }
    return res;
}

}  // namespace

const std::vector<std::string>& reference_case_ids() {
    static const std::vector<std::string> ids{"2", "3", "21", "4", "31", "22", "211"};
    return ids;
}

ReferenceResult run_reference_case(const std::string& id) {
    if (id == "2") return case_2();
    if (id == "3") return case_3();
    if (id == "21") return case_21();
    if (id == "4") return case_4();
    if (id == "31") return case_31();
    if (id == "22") return case_22();
    if (id == "211") return case_211();
    throw std::invalid_argument("unknown reference case: " + id);
}

}  // namespace fcc
