#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcc/a0.hpp"
#include "fcc/jordan.hpp"
#include "fcc/ratexpr.hpp"

namespace fcc {

// Raised on malformed spec files or unparsable expressions (CLI exit code 2).
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parsed spec file:
//   {"blocks": [2,1],
//    "F": [[[0,1],[0]], [[3]]],        // per block, per function, ascending coefficients
//    "epsilon": ["1","-1/2"],          // alternative to F: linear a0, one value per block
//    "a0": "u2^2",                     // raw override (negative tests), bypasses F/epsilon
//    "depth": 3,                       // optional hierarchy depth
//    "metric": [["u2","0"],["0","1"]]} // optional n x n matrix of expressions
struct SpecFile {
    std::vector<int> blocks;
    std::optional<std::vector<std::vector<std::vector<Rational>>>> F;
    std::optional<std::vector<Rational>> epsilon;
    std::optional<std::string> a0_raw;
    std::optional<std::vector<std::vector<std::string>>> metric;
    int depth = 2;
};

SpecFile parse_spec_file(const std::string& text);

// Expression parser for spec-file fields: rational constants, coordinates
// u1..un, + - * / ^ and parentheses.
RatExpr parse_expr(const std::string& text, const RingPtr& ring);

// The a0 selected by the spec file: built from the family / linear epsilon
// data, or the raw override parsed into a polynomial. `from_family` is false
// for raw overrides.
A0 build_spec_a0(const SpecFile& sf, const JordanSpec& spec, const RingPtr& ring);

}  // namespace fcc
