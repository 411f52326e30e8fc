#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcc/rational.hpp"
#include "fcc/ring.hpp"

namespace fcc {

// Exponent vector over the ambient ring's variables.
struct Monomial {
    std::vector<int> e;

    explicit Monomial(int nvars = 0) : e(static_cast<size_t>(nvars), 0) {}

    int degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded-lex order: grade first, then lexicographic tie-break with
// u1 < u2 < ... < un (the largest variable is the most significant).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (size_t i = a.e.size(); i-- > 0;) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        }
        return false;
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() : ring_(make_ring(0)) {}
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, const Rational& c) {
        Polynomial p(std::move(ring));
        if (c != 0) p.terms_[Monomial(p.nvars())] = c;
        return p;
    }
    static Polynomial variable(RingPtr ring, int var, int power = 1) {
        Polynomial p(std::move(ring));
        if (var < 0 || var >= p.nvars()) throw std::out_of_range("variable index out of range");
        Monomial m(p.nvars());
        m.e[static_cast<size_t>(var)] = power;
        p.terms_[m] = 1;
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    int nvars() const { return ring_->nvars(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Rational constant_value() const {
        if (terms_.empty()) return 0;
        auto it = terms_.find(Monomial(nvars()));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {  // degree of the zero polynomial reported as -1
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    // Leading term in graded-lex order.
    const std::pair<const Monomial, Rational>& leading() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    Polynomial operator+(const Polynomial& o) const {
        check_ring(o);
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Polynomial operator-(const Polynomial& o) const {
        check_ring(o);
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    Polynomial operator*(const Polynomial& o) const {
        check_ring(o);
        Polynomial r(ring_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m = ma;
                for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }
    Polynomial operator*(const Rational& c) const {
        Polynomial r(ring_);
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Formal partial derivative with respect to coordinate `coord` (0-based).
    // Function symbols differentiate through their derivative chains.
    Polynomial partial(int coord) const {
        if (coord < 0 || coord >= ring_->ncoords())
            throw std::out_of_range("partial: coordinate index out of range");
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) {
            for (size_t v = 0; v < m.e.size(); ++v) {
                if (m.e[v] == 0) continue;
                auto d = ring_->dvar(static_cast<int>(v), coord);
                if (d.kind == 0) continue;
                Monomial mm = m;
                mm.e[v] -= 1;
                if (d.kind == 2) mm.e[static_cast<size_t>(d.value)] += 1;
                r.add_term(mm, c * m.e[v]);
            }
        }
        return r;
    }

    // Exact evaluation; the point assigns a value to every ring variable.
    Rational evaluate(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != nvars())
            throw std::invalid_argument("evaluate: point dimension mismatch");
        Rational acc = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (size_t v = 0; v < m.e.size(); ++v) {
                for (int k = 0; k < m.e[v]; ++k) t *= point[v];
            }
            acc += t;
        }
        return acc;
    }

    // Rational content (gcd of numerators / lcm of denominators), sign of the
    // leading coefficient attached, such that *this == content * primitive().
    Rational content() const {
        if (terms_.empty()) return 0;
        Integer gnum = 0, lden = 1;
        for (const auto& [m, c] : terms_) {
            gnum = boost::multiprecision::gcd(gnum, rat_num(c) < 0 ? Integer(-rat_num(c)) : rat_num(c));
            lden = lden / boost::multiprecision::gcd(lden, rat_den(c)) * rat_den(c);
        }
        Rational content(gnum, lden);
        if (leading().second < 0) content = -content;
        return content;
    }
    Polynomial primitive() const {
        if (terms_.empty()) return *this;
        Rational c = content();
        Polynomial r(ring_);
        for (const auto& [m, k] : terms_) r.terms_[m] = k / c;
        return r;
    }

    // Largest monomial dividing every term (for factoring out u^k parts).
    Monomial monomial_content() const {
        Monomial g(nvars());
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (first) { g = m; first = false; continue; }
            for (size_t v = 0; v < g.e.size(); ++v) g.e[v] = std::min(g.e[v], m.e[v]);
        }
        return g;
    }

    Polynomial divide_monomial(const Monomial& m) const {
        Polynomial r(ring_);
        for (const auto& [mm, c] : terms_) {
            Monomial q = mm;
            for (size_t v = 0; v < q.e.size(); ++v) {
                q.e[v] -= m.e[v];
                if (q.e[v] < 0) throw std::logic_error("divide_monomial: not divisible");
            }
            r.terms_[q] = c;
        }
        return r;
    }
    Polynomial multiply_monomial(const Monomial& m) const {
        Polynomial r(ring_);
        for (const auto& [mm, c] : terms_) {
            Monomial q = mm;
            for (size_t v = 0; v < q.e.size(); ++v) q.e[v] += m.e[v];
            r.terms_[q] = c;
        }
        return r;
    }

    // Exact single-divisor division: returns the quotient iff divisor | *this.
    std::optional<Polynomial> exact_divide(const Polynomial& divisor) const {
        check_ring(divisor);
        if (divisor.is_zero()) throw std::invalid_argument("exact_divide by zero");
        Polynomial rem = *this;
        Polynomial quo(ring_);
        const auto& dl = divisor.leading();
        while (!rem.is_zero()) {
            const auto& rl = rem.leading();
            Monomial q = rl.first;
            bool divisible = true;
            for (size_t v = 0; v < q.e.size(); ++v) {
                q.e[v] -= dl.first.e[v];
                if (q.e[v] < 0) { divisible = false; break; }
            }
            if (!divisible) return std::nullopt;
            Rational qc = rl.second / dl.second;
            quo.add_term(q, qc);
            Polynomial t(ring_);
            t.terms_[q] = qc;
            rem = rem - divisor * t;
        }
        return quo;
    }

    bool depends_on(int var) const {
        for (const auto& [m, c] : terms_)
            if (m.e[static_cast<size_t>(var)] != 0) return true;
        return false;
    }

    // Reinterprets this polynomial in another ring with at least as many
    // coordinates/symbols (variables are matched by index).
    Polynomial transplant(const RingPtr& target) const {
        Polynomial r(target);
        int tn = target->nvars();
        for (const auto& [m, c] : terms_) {
            Monomial mm(tn);
            for (size_t v = 0; v < m.e.size(); ++v) {
                if (m.e[v] != 0) {
                    if (static_cast<int>(v) >= tn)
                        throw std::invalid_argument("transplant: variable not present in target ring");
                    mm.e[v] = m.e[v];
                }
            }
            r.add_term(mm, c);
        }
        return r;
    }

    // Canonical string form: descending graded-lex, "c*u1^a1*u2^a2*...".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational c = it->second;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            Rational a = c < 0 ? Rational(-c) : c;
            bool printed_coeff = false;
            if (a != 1 || it->first.is_one()) {
                out << rat_to_string(a);
                printed_coeff = true;
            }
            for (size_t v = 0; v < it->first.e.size(); ++v) {
                int p = it->first.e[v];
                if (p == 0) continue;
                if (printed_coeff) out << "*";
                out << ring_->var_name(static_cast<int>(v));
                if (p != 1) out << "^" << p;
                printed_coeff = true;
            }
        }
        return out.str();
    }

private:
    void check_ring(const Polynomial& o) const {
        if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
            throw std::invalid_argument("polynomial ring mismatch");
    }

    RingPtr ring_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace fcc
