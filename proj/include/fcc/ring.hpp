#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fcc {

// Ambient polynomial ring. Variables 0..ncoords-1 are the coordinates
// u1..un. Optional extra variables are formal symbols: either constants
// (epsilon parameters) or function symbols F depending on a single
// coordinate, each linked to the symbol representing its derivative.
class Ring {
public:
    struct Symbol {
        std::string name;
        int dep_coord = -1;    // coordinate (0-based) the symbol depends on; -1 = constant
        int derivative = -1;   // variable index of d(symbol)/d(dep_coord); -1 = none defined
    };

    explicit Ring(int ncoords) : ncoords_(ncoords) {
        if (ncoords < 0) throw std::invalid_argument("negative coordinate count");
    }

    int ncoords() const { return ncoords_; }
    int nvars() const { return ncoords_ + static_cast<int>(symbols_.size()); }
    bool pure() const { return symbols_.empty(); }

    // Adds a formal symbol; returns its variable index.
    int add_symbol(const std::string& name, int dep_coord = -1) {
        symbols_.push_back({name, dep_coord, -1});
        return nvars() - 1;
    }

    // Adds a chain sym, sym', sym'', ... of `length` function symbols of
    // coordinate dep_coord, each the derivative of the previous.
    // Returns the variable index of the first.
    int add_derivative_chain(const std::string& name, int dep_coord, int length) {
        int first = -1;
        for (int d = 0; d < length; ++d) {
            std::string nm = name + std::string(static_cast<size_t>(d), '\'');
            int v = add_symbol(nm, dep_coord);
            if (d == 0) first = v;
            else symbols_[static_cast<size_t>(v - ncoords_ - 1)].derivative = v;
        }
        return first;
    }

    const Symbol& symbol(int var) const {
        if (var < ncoords_ || var >= nvars()) throw std::out_of_range("not a symbol variable");
        return symbols_[static_cast<size_t>(var - ncoords_)];
    }

    std::string var_name(int var) const {
        if (var < 0 || var >= nvars()) throw std::out_of_range("variable index out of range");
        if (var < ncoords_) return "u" + std::to_string(var + 1);
        return symbols_[static_cast<size_t>(var - ncoords_)].name;
    }

    // Derivative of variable `var` with respect to coordinate `coord`.
    // Result: {0 or 1 constant, or a variable index} encoded as:
    //   kind 0 -> zero, kind 1 -> one, kind 2 -> the variable `value`.
    struct VarDerivative { int kind; int value; };
    VarDerivative dvar(int var, int coord) const {
        if (coord < 0 || coord >= ncoords_) throw std::out_of_range("coordinate index out of range");
        if (var < ncoords_) return var == coord ? VarDerivative{1, 0} : VarDerivative{0, 0};
        const Symbol& s = symbols_[static_cast<size_t>(var - ncoords_)];
        if (s.dep_coord != coord) return {0, 0};
        if (s.derivative < 0)
            throw std::logic_error("derivative of symbol " + s.name + " is not defined in this ring");
        return {2, s.derivative};
    }

    bool operator==(const Ring& other) const {
        if (ncoords_ != other.ncoords_ || symbols_.size() != other.symbols_.size()) return false;
        for (size_t i = 0; i < symbols_.size(); ++i) {
            if (symbols_[i].name != other.symbols_[i].name ||
                symbols_[i].dep_coord != other.symbols_[i].dep_coord ||
                symbols_[i].derivative != other.symbols_[i].derivative)
                return false;
        }
        return true;
    }

private:
    int ncoords_;
    std::vector<Symbol> symbols_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(int ncoords) { return std::make_shared<Ring>(ncoords); }

}  // namespace fcc
