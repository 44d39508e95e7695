// Runs every verification criterion and prints one pass/fail line each.
// Exit code 0 iff all criteria pass.

#include <cstdio>

#include "oht/acceptance.hpp"

int main() {
    const auto results = oht::acceptance::run_all();
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] %2d %-26s (%6.2fs)  %s\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        all = all && r.passed;
    }
    std::printf("%s: %zu criteria\n", all ? "ALL PASS" : "FAILURES PRESENT", results.size());
    return all ? 0 : 1;
}
