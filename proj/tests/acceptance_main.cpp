// Paper-reproduction acceptance suite: one pass/fail line per criterion,
// nonzero exit if anything fails.
#include <cstdio>

#include "twistcode/acceptance.hpp"

int main() {
    auto results = twistcode::run_acceptance();
    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] criterion %2d: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.label.c_str());
        std::printf("         %s\n", r.detail.c_str());
        if (!r.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
