// Acceptance suite: runs the full pinned verification table and prints one
// PASS/FAIL line per row.  Every row is asserted.
//
// Known red row: graphs/(-17, -29/16).  The printed source pair for the
// 14(3,2) structure cannot be realized over Q(sqrt(-17)): the 2-cycle of
// f_{-29/16} satisfies x^2 + x - 13/16, whose splitting field is
// Q(sqrt(17)).  The suite implements the row as stated, reports the
// discrepancy, and prints the corrected pair alongside.  See the project
// notes for the full analysis.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "quadpreper/verify.hpp"

using namespace quadpreper;

TEST_CASE("acceptance: the full verification table") {
    VerifyResult res = run_paper_verification({}, std::cout);
    for (const auto& f : res.failures)
        MESSAGE("failed row: ", f);
    CHECK(res.passed >= 60);
    // stays red until the (-17, -29/16) row is attainable; every other row
    // must pass, and this assertion keeps the discrepancy visible
    CHECK(res.failed == 0);
}
