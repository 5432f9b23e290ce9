#pragma once
// Built-in verification suite.  Each check compares an observed value against
// a pinned reference value and reports one line; the CLI selftest command and
// the acceptance test binary both run through this.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace suzuki {

struct Check {
    std::string id;        // stable identifier, e.g. "5-rank"
    std::string name;      // one-line description
    std::string observed;
    std::string expected;
    bool pass = false;
    double ms = 0.0;
};

struct SelftestOptions {
    uint32_t m = 1;       // checks are pinned for m = 1 (plus formula checks at m = 2)
    uint64_t seed = 1;
    bool quick = false;   // skip the large-level matrix checks, keep ell <= 3 coverage
    bool full_gram = false;  // upgrade the duality checks to the full pairwise product
    // Test hook: sabotage the field construction to prove the suite notices.
    bool corrupt_field_hook = false;
    // When nonempty, run only checks whose id is listed.
    std::vector<std::string> only;
    // Called after each check completes; return false to stop early.
    std::function<bool(const Check&)> on_check;
};

std::vector<Check> run_selftest(const SelftestOptions& opt);

bool all_pass(const std::vector<Check>& checks);

// Fixed one-line rendering: "[PASS] id name: observed=... expected=... (12ms)".
std::string format_check(const Check& c);

}  // namespace suzuki
