#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fcc/poly.hpp"

namespace fcc {

// Exact rational expression num/den. The denominator is held as a product of
// primitive polynomial factors with multiplicities; common factors introduced
// by arithmetic are cancelled by exact division. This is purely a performance
// measure: zero-testing is still "numerator expands to zero", and the exposed
// num()/den() pair obeys the canonical positive-leading-denominator rule.
class RatExpr {
public:
    struct Factor {
        Polynomial poly;  // primitive, positive leading coefficient, non-constant
        int mult;
    };

    RatExpr() = default;
    explicit RatExpr(Polynomial num) : num_(std::move(num)) {}
    RatExpr(Polynomial num, const Polynomial& den) : num_(std::move(num)) {
        divide_by(den);
    }

    static RatExpr constant(const RingPtr& ring, const Rational& c) {
        return RatExpr(Polynomial::constant(ring, c));
    }
    static RatExpr variable(const RingPtr& ring, int var, int power = 1) {
        return RatExpr(Polynomial::variable(ring, var, power));
    }

    const RingPtr& ring() const { return num_.ring(); }
    bool is_zero() const { return num_.is_zero(); }

    const Polynomial& num_raw() const { return num_; }
    const std::vector<Factor>& den_factors() const { return den_; }

    Polynomial num() const { return num_; }
    Polynomial den() const {
        Polynomial d = Polynomial::constant(num_.ring(), 1);
        for (const auto& f : den_) {
            for (int k = 0; k < f.mult; ++k) d *= f.poly;
        }
        return d;
    }

    bool operator==(const RatExpr& o) const { return (*this - o).is_zero(); }
    bool operator!=(const RatExpr& o) const { return !(*this == o); }

    RatExpr operator-() const {
        RatExpr r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RatExpr operator+(const RatExpr& o) const {
        if (num_.is_zero()) return o;
        if (o.num_.is_zero()) return *this;
        RatExpr r;
        r.den_ = merge_lcm(den_, o.den_);
        r.num_ = num_ * cofactor(r.den_, den_) + o.num_ * cofactor(r.den_, o.den_);
        r.reduce();
        return r;
    }
    RatExpr operator-(const RatExpr& o) const { return *this + (-o); }

    RatExpr operator*(const RatExpr& o) const {
        RatExpr r;
        r.num_ = num_ * o.num_;
        if (r.num_.is_zero()) return r;
        r.den_ = den_;
        for (const auto& f : o.den_) add_factor(r.den_, f.poly, f.mult);
        r.reduce();
        return r;
    }
    RatExpr operator*(const Rational& c) const {
        RatExpr r = *this;
        r.num_ = r.num_ * c;
        if (r.num_.is_zero()) r.den_.clear();
        return r;
    }

    RatExpr inverse() const {
        if (num_.is_zero()) throw std::domain_error("division by the zero expression");
        RatExpr r;
        r.num_ = den();
        r.divide_by(num_);
        return r;
    }
    RatExpr operator/(const RatExpr& o) const { return *this * o.inverse(); }

    RatExpr& operator+=(const RatExpr& o) { return *this = *this + o; }
    RatExpr& operator-=(const RatExpr& o) { return *this = *this - o; }
    RatExpr& operator*=(const RatExpr& o) { return *this = *this * o; }
    RatExpr& operator/=(const RatExpr& o) { return *this = *this / o; }

    Rational evaluate(const std::vector<Rational>& point) const {
        Rational d = 1;
        for (const auto& f : den_) {
            Rational fv = f.poly.evaluate(point);
            if (fv == 0) throw std::domain_error("evaluate: denominator vanishes at point");
            for (int k = 0; k < f.mult; ++k) d *= fv;
        }
        return num_.evaluate(point) / d;
    }

    // Returns the numerator as a polynomial iff the denominator is trivial
    // or divides the numerator exactly.
    Polynomial to_polynomial() const {
        if (den_.empty()) return num_;
        Polynomial p = num_;
        for (const auto& f : den_) {
            for (int k = 0; k < f.mult; ++k) {
                auto q = p.exact_divide(f.poly);
                if (!q) throw std::domain_error("rational expression is not polynomial");
                p = *q;
            }
        }
        return p;
    }

    // Partial derivative with respect to coordinate `coord` (quotient rule,
    // applied factor-by-factor so denominators stay factored).
    RatExpr partial(int coord) const {
        RatExpr r;
        r.num_ = num_.partial(coord);
        r.den_ = den_;
        r.reduce();
        for (const auto& f : den_) {
            Polynomial fp = f.poly.partial(coord);
            if (fp.is_zero()) continue;
            RatExpr t;
            t.num_ = num_ * fp * Rational(-f.mult);
            t.den_ = den_;
            add_factor(t.den_, f.poly, 1);
            t.reduce();
            r += t;
        }
        return r;
    }

    // Least common multiple of the denominators of `xs`, as a polynomial.
    static Polynomial den_lcm(const RingPtr& ring, const std::vector<RatExpr>& xs) {
        std::vector<Factor> acc;
        for (const auto& x : xs) acc = merge_lcm(acc, x.den_);
        Polynomial d = Polynomial::constant(ring, 1);
        for (const auto& f : acc) {
            for (int k = 0; k < f.mult; ++k) d *= f.poly;
        }
        return d;
    }

    // Canonical form "(NUM)/(DEN)", or NUM alone for a trivial denominator.
    std::string str() const {
        if (den_.empty()) return num_.str();
        return "(" + num_.str() + ")/(" + den().str() + ")";
    }

private:
    // Total order on polynomials used only to keep factor lists sorted.
    static int poly_cmp(const Polynomial& a, const Polynomial& b) {
        auto ia = a.terms().begin(), ib = b.terms().begin();
        GrlexLess less;
        for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
            if (less(ia->first, ib->first)) return -1;
            if (less(ib->first, ia->first)) return 1;
            if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        }
        if (ia != a.terms().end()) return 1;
        if (ib != b.terms().end()) return -1;
        return 0;
    }

    static void add_factor(std::vector<Factor>& list, const Polynomial& p, int mult) {
        for (auto& f : list) {
            int c = poly_cmp(f.poly, p);
            if (c == 0) { f.mult += mult; return; }
        }
        Factor nf{p, mult};
        auto it = list.begin();
        while (it != list.end() && poly_cmp(it->poly, p) < 0) ++it;
        list.insert(it, nf);
    }

    static std::vector<Factor> merge_lcm(const std::vector<Factor>& a, const std::vector<Factor>& b) {
        std::vector<Factor> r = a;
        for (const auto& f : b) {
            bool found = false;
            for (auto& g : r) {
                if (poly_cmp(g.poly, f.poly) == 0) {
                    g.mult = std::max(g.mult, f.mult);
                    found = true;
                    break;
                }
            }
            if (!found) add_factor(r, f.poly, f.mult);
        }
        return r;
    }

    // Product of the factors of `all` in excess of those of `part`.
    Polynomial cofactor(const std::vector<Factor>& all, const std::vector<Factor>& part) const {
        Polynomial p = Polynomial::constant(num_.ring(), 1);
        for (const auto& f : all) {
            int m = f.mult;
            for (const auto& g : part) {
                if (poly_cmp(g.poly, f.poly) == 0) { m -= g.mult; break; }
            }
            for (int k = 0; k < m; ++k) p *= f.poly;
        }
        return p;
    }

    // Multiplies the denominator by `q` (factored into content, monomial part
    // and primitive remainder), folding the content into the numerator.
    void divide_by(const Polynomial& q) {
        if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
        Rational c = q.content();
        Polynomial p = q.primitive();
        num_ = num_ * (Rational(1) / c);
        Monomial mc = p.monomial_content();
        if (!mc.is_one()) {
            p = p.divide_monomial(mc);
            for (size_t v = 0; v < mc.e.size(); ++v) {
                if (mc.e[v] > 0)
                    add_factor(den_, Polynomial::variable(num_.ring(), static_cast<int>(v)), mc.e[v]);
            }
        }
        if (!p.is_constant()) add_factor(den_, p, 1);
        reduce();
    }

    void reduce() {
        if (num_.is_zero()) { den_.clear(); return; }
        for (auto it = den_.begin(); it != den_.end();) {
            while (it->mult > 0) {
                auto q = num_.exact_divide(it->poly);
                if (!q) break;
                num_ = *q;
                --it->mult;
            }
            if (it->mult == 0) it = den_.erase(it);
            else ++it;
        }
    }

    Polynomial num_;
    std::vector<Factor> den_;
};

inline RatExpr operator*(const Rational& c, const RatExpr& a) { return a * c; }

}  // namespace fcc
