// Acceptance runner: prints one PASS/FAIL line per criterion.
// Usage: hbac_acceptance [--criterion N]

#include <cstring>
#include <iostream>
#include <string>

#include "hbac/acceptance.hpp"

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::stoi(argv[++i]);
        } else {
            std::cerr << "usage: hbac_acceptance [--criterion N]\n";
            return 1;
        }
    }
    const int failures = hbac::acceptance::run_and_print(std::cout, only);
    return failures == 0 ? 0 : 2;
}
