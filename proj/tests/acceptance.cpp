// Runs all twelve acceptance criteria and prints one line per criterion.

#include <cstdio>

#include "rft/verify_suite.hpp"

int main() {
    const auto results = rft::run_verify_suite({});
    for (const auto& r : results)
        std::printf("criterion %2d [%s]: %s%s%s\n", r.id, r.name.c_str(),
                    r.passed ? "PASS" : "FAIL", r.detail.empty() ? "" : " - ",
                    r.detail.c_str());
    return rft::all_passed(results) ? 0 : 1;
}
