#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fcc/reference_cases.hpp"

using namespace fcc;

TEST_CASE("all published reference cases pass") {
    for (const auto& id : reference_case_ids()) {
        ReferenceResult res = run_reference_case(id);
        for (const auto& chk : res.checks) {
            INFO("case " << id << " " << chk.name << ": " << chk.detail);
            CHECK(chk.pass);
        }
    }
}

TEST_CASE("unknown case id is rejected") {
    CHECK_THROWS_AS(run_reference_case("5"), std::invalid_argument);
}
