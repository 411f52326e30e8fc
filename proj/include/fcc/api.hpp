#pragma once

#include <string>
#include <vector>

namespace fcc {

// String-level entry points shared by the CLI and the python bindings.
// All take/return JSON text; SpecError (or std::invalid_argument for bad
// reference-case ids) signals unusable input.

// {"a0": "<canonical form>"}
std::string gen_a0_json(const std::string& spec_text);

struct CheckRequest {
    bool master = false;
    bool connection = false;
    bool curvature = false;
    bool dual = false;
    bool metric = false;
    int hierarchy = -1;  // depth K when >= 0
};

struct CheckOutcome {
    bool pass = false;
    std::string report;  // JSON object, keys sorted, byte-deterministic
};

CheckOutcome run_check(const std::string& spec_text, const CheckRequest& req);

// Runs the published-table regressions; empty filter means all cases.
CheckOutcome run_verify(const std::vector<std::string>& case_filter);

}  // namespace fcc
