// Runs the acceptance criteria, one PASS/FAIL line each. With arguments,
// runs only the named criteria. Exit status is 0 only if all selected pass.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "lrc/acceptance.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> only(argv + 1, argv + argc);
    int failed = 0;
    int ran = 0;
    for (const auto& c : lrc::acceptance_criteria(lrc::Guards::from_environment())) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        const auto result = lrc::run_criterion(c);
        std::cout << lrc::format_result(result) << std::endl;
        ++ran;
        if (!result.passed) ++failed;
    }
    if (ran == 0) {
        std::cerr << "no criterion selected\n";
        return 2;
    }
    std::cout << ran - failed << "/" << ran << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
