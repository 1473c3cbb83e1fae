// Runs every acceptance check and prints one PASS/FAIL line each.
#include "virasoro/checks.hpp"

#include <cstdio>

int main() {
    int failed = 0;
    for (int id : virasoro::check_ids()) {
        const auto r = virasoro::run_check(id);
        std::printf("%s %d %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
        for (const auto& note : r.notes) std::printf("    %s\n", note.c_str());
        if (!r.pass) ++failed;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
