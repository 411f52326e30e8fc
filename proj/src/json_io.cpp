#include "fcc/json_io.hpp"

#include <cctype>

#include <json.hpp>

namespace fcc {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& v, const char* where) {
    try {
        if (v.is_number_integer()) return Rational(static_cast<long long>(v.get<long long>()));
        if (v.is_string()) return rat_from_string(v.get<std::string>());
    } catch (const std::exception&) {
    }
    throw SpecError(std::string(where) + ": expected an integer or rational string");
}

}  // namespace

SpecFile parse_spec_file(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw SpecError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SpecError("spec file: top-level JSON object required");

    SpecFile sf;
    if (!doc.contains("blocks") || !doc["blocks"].is_array() || doc["blocks"].empty())
        throw SpecError("spec file: \"blocks\" must be a non-empty array of positive integers");
    for (const auto& b : doc["blocks"]) {
        if (!b.is_number_integer() || b.get<int>() < 1)
            throw SpecError("spec file: \"blocks\" must be a non-empty array of positive integers");
        sf.blocks.push_back(b.get<int>());
    }

    if (doc.contains("F")) {
        const json& F = doc["F"];
        if (!F.is_array() || F.size() != sf.blocks.size())
            throw SpecError("spec file: \"F\" must list one function family per block");
        std::vector<std::vector<std::vector<Rational>>> fam;
        for (size_t a = 0; a < F.size(); ++a) {
            if (!F[a].is_array() || static_cast<int>(F[a].size()) != sf.blocks[a])
                throw SpecError("spec file: block " + std::to_string(a + 1) + " needs " +
                                std::to_string(sf.blocks[a]) + " coefficient arrays");
            std::vector<std::vector<Rational>> fns;
            for (const auto& fn : F[a]) {
                if (!fn.is_array())
                    throw SpecError("spec file: \"F\" entries must be coefficient arrays");
                std::vector<Rational> coeffs;
                for (const auto& c : fn) coeffs.push_back(rational_from_json(c, "spec file: \"F\""));
                fns.push_back(std::move(coeffs));
            }
            fam.push_back(std::move(fns));
        }
        sf.F = std::move(fam);
    }

    if (doc.contains("epsilon")) {
        const json& eps = doc["epsilon"];
        if (!eps.is_array() || eps.size() != sf.blocks.size())
            throw SpecError("spec file: \"epsilon\" must list one value per block");
        std::vector<Rational> e;
        for (const auto& v : eps) e.push_back(rational_from_json(v, "spec file: \"epsilon\""));
        sf.epsilon = std::move(e);
    }

    if (doc.contains("a0")) {
        if (!doc["a0"].is_string())
            throw SpecError("spec file: \"a0\" must be an expression string");
        sf.a0_raw = doc["a0"].get<std::string>();
    }

    int sources = int(sf.F.has_value()) + int(sf.epsilon.has_value()) + int(sf.a0_raw.has_value());
    if (sources != 1)
        throw SpecError("spec file: exactly one of \"F\", \"epsilon\", \"a0\" is required");

    if (doc.contains("depth")) {
        if (!doc["depth"].is_number_integer() || doc["depth"].get<int>() < 0)
            throw SpecError("spec file: \"depth\" must be a non-negative integer");
        sf.depth = doc["depth"].get<int>();
    }

    if (doc.contains("metric")) {
        int n = 0;
        for (int m : sf.blocks) n += m;
        const json& g = doc["metric"];
        if (!g.is_array() || static_cast<int>(g.size()) != n)
            throw SpecError("spec file: \"metric\" must be an n x n matrix of expression strings");
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : g) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw SpecError(
                    "spec file: \"metric\" must be an n x n matrix of expression strings");
            std::vector<std::string> r;
            for (const auto& v : row) {
                if (!v.is_string())
                    throw SpecError("spec file: \"metric\" entries must be expression strings");
                r.push_back(v.get<std::string>());
            }
            rows.push_back(std::move(r));
        }
        sf.metric = std::move(rows);
    }

    return sf;
}

namespace {

// Recursive-descent parser over + - * / ^ ( ) with integer literals and
// coordinates u1..un.
class ExprParser {
public:
    ExprParser(const std::string& s, const RingPtr& ring) : s_(s), ring_(ring) {}

    RatExpr parse() {
        RatExpr r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    RatExpr expr() {
        RatExpr r = term();
        for (;;) {
            skip_ws();
            if (match('+'))
                r = r + term();
            else if (match('-'))
                r = r - term();
            else
                return r;
        }
    }

    RatExpr term() {
        RatExpr r = factor();
        for (;;) {
            skip_ws();
            if (match('*')) {
                r = r * factor();
            } else if (match('/')) {
                RatExpr d = factor();
                if (d.is_zero()) fail("division by zero");
                r = r / d;
            } else {
                return r;
            }
        }
    }

    RatExpr factor() {
        skip_ws();
        if (match('-')) return RatExpr::constant(ring_, -1) * factor();
        if (match('+')) return factor();
        RatExpr base = primary();
        skip_ws();
        if (match('^')) {
            skip_ws();
            bool neg = match('-');
            int e = integer();
            RatExpr r = RatExpr::constant(ring_, 1);
            for (int k = 0; k < e; ++k) r = r * base;
            if (neg) {
                if (base.is_zero()) fail("division by zero");
                r = RatExpr::constant(ring_, 1) / r;
            }
            return r;
        }
        return base;
    }

    RatExpr primary() {
        skip_ws();
        if (match('(')) {
            RatExpr r = expr();
            skip_ws();
            if (!match(')')) fail("missing ')'");
            return r;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return RatExpr::constant(ring_, Rational(integer()));
        if (pos_ < s_.size() && s_[pos_] == 'u') {
            ++pos_;
            int k = integer();
            if (k < 1 || k > ring_->ncoords()) fail("coordinate index out of range");
            return RatExpr::variable(ring_, k - 1);
        }
        fail("expected a number, coordinate, or '('");
    }

    int integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 9) fail("integer literal too large");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    bool match(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw SpecError("expression \"" + s_ + "\": " + why + " at position " +
                        std::to_string(pos_));
    }

    const std::string& s_;
    RingPtr ring_;
    size_t pos_ = 0;
};

}  // namespace

RatExpr parse_expr(const std::string& text, const RingPtr& ring) {
    return ExprParser(text, ring).parse();
}

A0 build_spec_a0(const SpecFile& sf, const JordanSpec& spec, const RingPtr& ring) {
    if (sf.a0_raw) {
        RatExpr e = parse_expr(*sf.a0_raw, ring);
        if (!e.den().is_constant())
            throw SpecError("a0 override must be a polynomial, got " + e.str());
        Polynomial p = e.num();
        Rational d = e.den().constant_value();
        Polynomial scaled(ring);
        for (const auto& [m, c] : p.terms()) scaled.add_term(m, c / d);
        return A0{scaled, false};
    }

    A0Family fam;
    if (sf.epsilon) {
        // Linear seed per block: F_i = 0 for i < m, F_m = m_alpha eps_alpha u^{1(alpha)}.
        for (int a = 0; a < spec.nblocks(); ++a) {
            std::vector<Polynomial> fns(static_cast<size_t>(spec.size(a)), Polynomial(ring));
            fns.back() = Polynomial::constant(ring, Rational(spec.size(a)) * (*sf.epsilon)[a]) *
                         Polynomial::variable(ring, spec.flat(a, 1));
            fam.F.push_back(std::move(fns));
        }
    } else {
        for (int a = 0; a < spec.nblocks(); ++a) {
            std::vector<Polynomial> fns;
            for (const auto& coeffs : (*sf.F)[a]) {
                Polynomial f(ring);
                for (size_t d = 0; d < coeffs.size(); ++d)
                    f = f + Polynomial::constant(ring, coeffs[d]) *
                                Polynomial::variable(ring, spec.flat(a, 1), static_cast<int>(d));
                fns.push_back(std::move(f));
            }
            fam.F.push_back(std::move(fns));
        }
    }
    return build_a0(spec, fam, ring);
}

}  // namespace fcc
