// Acceptance criteria 1..11: one PASS/FAIL line each; exit status 1 on any failure.
#include <cstdio>

#include "vvjack/checks.hpp"

int main() {
    bool all = true;
    vvjack::acceptance_suite([&](int k, const vvjack::CheckResult& r) {
        all = all && r.passed;
        std::printf("%s criterion %d: %s (%.2f s) -- %s\n", r.passed ? "PASS" : "FAIL", k, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
    });
    return all ? 0 : 1;
}
