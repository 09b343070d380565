// Runs every numbered verification criterion and prints one PASS/FAIL line
// each, as soon as the criterion finishes. Exit status is the number of
// failures (0 when everything holds).

#include <cstdio>

#include "gpe/acceptance.hpp"

int main() {
    int failures = 0;
    int total = 0;
    for (int id : gpe::criterion_ids()) {
        std::vector<gpe::CriterionResult> batch = gpe::run_acceptance({id}, 0);
        for (const auto& r : batch) {
            std::printf("%s  %2d %-48s (%7.2f s)  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                        r.name.c_str(), r.seconds, r.detail.c_str());
            std::fflush(stdout);
            ++total;
            if (!r.pass) ++failures;
        }
    }
    if (failures == 0)
        std::printf("all %d criteria hold\n", total);
    else
        std::printf("%d of %d criteria FAILED\n", failures, total);
    return failures;
}
