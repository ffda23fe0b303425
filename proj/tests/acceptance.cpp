// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [--depth quick|full]

#include <cstring>
#include <iostream>

#include "pqsym/acceptance.hpp"

int main(int argc, char** argv)
{
    using namespace pqsym::acceptance;
    Depth depth = Depth::full;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "quick") == 0) depth = Depth::quick;

    int failures = 0;
    for (const auto& c : criteria()) {
        const Result r = run(c, depth);
        std::cout << format_line(r) << std::endl;
        if (!r.pass) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
