// Acceptance runner: executes every verification suite at its pinned
// tolerance and prints one pass/fail line per criterion.

#include <cstdint>
#include <cstring>
#include <iostream>

#include "vtcomb/suites.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 12345;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
        if (std::strcmp(argv[i], "--verbose") == 0) verbose = true;
    }

    auto report = vt::suites::run_all(seed);
    for (const auto& c : report.results) {
        std::cout << (c.passed ? "PASS" : "FAIL") << " - criterion " << c.id << ": " << c.name
                  << "\n";
        if (verbose || !c.passed)
            for (const auto& line : c.lines) std::cout << "         " << line << "\n";
    }
    std::cout << (report.all_passed() ? "ACCEPTANCE: all criteria passed"
                                      : "ACCEPTANCE: FAILURES PRESENT")
              << " (seed " << seed << ")\n";
    return report.all_passed() ? 0 : 1;
}
