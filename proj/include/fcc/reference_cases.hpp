#pragma once

#include <string>
#include <vector>

#include "fcc/curvature.hpp"

namespace fcc {

// One verification step within a reference case ("a0-form", "christoffel",
// "dual-christoffel", "dual-flat", "metric"); on failure `detail` carries the
// first mismatching symbol with both canonical forms.
struct ReferenceCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReferenceResult {
    std::string id;
    std::vector<ReferenceCheck> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Case ids: "2", "3", "21", "4", "31", "22", "211" (Jordan block sizes).
const std::vector<std::string>& reference_case_ids();

// Runs the published-table regression for one case: the general solution of
// the master equation, the Christoffel table with arbitrary symbolic F, the
// dual-connection table with symbolic epsilon (plus dual flatness), and an
// integer-parameter metric fixture. Throws std::invalid_argument on a bad id.
ReferenceResult run_reference_case(const std::string& id);

}  // namespace fcc
