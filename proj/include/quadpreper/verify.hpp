#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quadpreper {

// The pinned verification table: every externally sourced constant and
// structural claim the library reproduces, grouped in sections.  Each row
// prints one PASS/FAIL line.  Sections:
//   dynatomic resultants counts search graphs oracle families closure screen
struct VerifyOptions {
    std::vector<std::string> only;   // run only these sections (empty = all)
    std::string inject_fault;       // section name whose expected value gets
                                    // deliberately corrupted (harness check)
};

struct VerifyResult {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;
    bool ok() const { return failed == 0; }
};

VerifyResult run_paper_verification(const VerifyOptions& options, std::ostream& out);

}  // namespace quadpreper
