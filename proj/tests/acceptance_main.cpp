#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "mcloc/selftest.hpp"

int main(int argc, char** argv) {
    uint64_t seed = 2024;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
        if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    auto results = mcloc::runAcceptance(seed, only);
    bool all = true;
    for (const auto& r : results) {
        std::puts(mcloc::formatCriterion(r).c_str());
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
