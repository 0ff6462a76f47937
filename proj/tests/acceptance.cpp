// Acceptance gate: runs every acceptance criterion and prints one
// PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <cstdio>
#include <string>
#include <vector>

#include "gluing/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
    auto results = gluing::accept::run_acceptance(ids);
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("%s criterion %2d (%s): %s [%.1fs]\n", r.pass ? "PASS" : "FAIL",
                    r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        all_pass = all_pass && r.pass;
    }
    if (results.empty()) {
        std::printf("no criteria selected\n");
        return 2;
    }
    std::printf("%s: %zu criteria\n", all_pass ? "ALL PASS" : "FAILURES", results.size());
    return all_pass ? 0 : 1;
}
