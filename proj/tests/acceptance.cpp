// Acceptance gate: runs the built-in verification suite and exits nonzero
// unless every selected check passes.  Each check prints exactly one
// [PASS]/[FAIL] line.  `--check <id>` (repeatable) narrows the run to the
// named checks so the build can schedule them as separate test entries.

#include <suzuki/selftest.hpp>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

int main(int argc, char** argv) {
    suzuki::SelftestOptions opt;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        auto value = [&](const char* flag) -> const char* {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "missing value for %s\n", flag);
                std::exit(2);
            }
            return argv[++i];
        };
        if (a == "--check") {
            opt.only.emplace_back(value("--check"));
        } else if (a == "--seed") {
            opt.seed = std::strtoull(value("--seed"), nullptr, 10);
        } else if (a == "--quick") {
            opt.quick = true;
        } else if (a == "--full-gram") {
            opt.full_gram = true;
        } else {
            std::fprintf(stderr,
                         "usage: acceptance [--check <id>]... [--seed N] [--quick] [--full-gram]\n");
            return 2;
        }
    }

    opt.on_check = [](const suzuki::Check& c) {
        std::puts(suzuki::format_check(c).c_str());
        std::fflush(stdout);
        return true;
    };

    const auto checks = suzuki::run_selftest(opt);
    if (!opt.only.empty() && checks.size() != opt.only.size()) {
        std::fprintf(stderr, "unknown check id in --check selection\n");
        return 2;
    }
    return suzuki::all_pass(checks) ? 0 : 1;
}
