// Release-gate runner: one line per criterion, exit 1 on any failure.

#include "qplane/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

int main(int argc, char** argv) {
    qplane::AcceptanceConfig cfg;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0)
            cfg.seed = std::strtoull(argv[i + 1], nullptr, 10);
    }
    auto results = qplane::run_acceptance(cfg);
    int passed = 0;
    for (const auto& r : results) {
        std::printf("[%s] %2d. %-34s (%6.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.details.c_str());
        passed += r.pass ? 1 : 0;
    }
    std::printf("%d/%zu criteria passed (seed %llu)\n", passed, results.size(),
                static_cast<unsigned long long>(cfg.seed));
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}
