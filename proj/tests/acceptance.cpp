// Acceptance suite driver: one pass/fail line per criterion, nonzero exit on
// any failure.  The same checks back the CLI `selftest` verb.

#include <iostream>

#include "fano/selftest.hpp"

int main() {
    int failures = fano::selftest::run_all(std::cout);
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
