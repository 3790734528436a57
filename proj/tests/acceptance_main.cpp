// Acceptance gate: runs every criterion at its pinned tolerance and prints
// one pass/fail line per criterion. Exit status 0 only when all pass.

#include <cstring>
#include <iostream>

#include "fracdamp/acceptance.hpp"

int main(int argc, char** argv) {
    using namespace fracdamp::acceptance;
    Suite suite = Suite::Full;
    if (argc > 1 && std::strcmp(argv[1], "--quick") == 0) suite = Suite::Quick;
    const auto results = run_suite(suite);
    const int failed = print_report(std::cout, results);
    return failed == 0 ? 0 : 1;
}
