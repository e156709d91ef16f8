#include "gdlab/acceptance.hpp"

#include <cstdio>

int main() {
    gdlab::AcceptanceOptions opt;
    bool all = true;
    gdlab::run_acceptance(opt, [&](const gdlab::CriterionResult& r) {
        std::printf("%s\n", gdlab::format_result(r).c_str());
        std::fflush(stdout);
        all = all && r.passed;
    });
    return all ? 0 : 1;
}
