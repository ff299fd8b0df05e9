// One line per acceptance criterion; exit status is the number of failures.
#include <cstdio>
#include <cstdlib>

#include "monoideal/checks.hpp"

using monoideal::AcceptanceSuite;

// Thresholds fixed here so that a change in the library cannot relax them.
static_assert(AcceptanceSuite::criterion_count == 8);
static_assert(AcceptanceSuite::cycle_depth_time_limit == 300.0);
static_assert(AcceptanceSuite::random_transform_instances >= 500);
static_assert(AcceptanceSuite::random_ass_instances >= 300);
static_assert(AcceptanceSuite::random_corollary_instances >= 300);
static_assert(AcceptanceSuite::min_completions >= 3);

int main() {
    monoideal::CheckOptions options;
    options.seed = 20240917;
    options.timeout_seconds = AcceptanceSuite::cycle_depth_time_limit;
    AcceptanceSuite suite(options);

    int failures = 0;
    for (const auto& r : suite.run_all()) {
        std::printf("criterion %d: %s  %s  (%s; %.2fs)\n", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str(),
                    r.detail.c_str(), r.seconds);
        failures += r.passed ? 0 : 1;
    }
    for (const auto& e : suite.soundness_log())
        if (e.verified_length > e.depth) {
            std::printf("soundness: %s verified %zu exceeds depth %zu\n", e.label.c_str(), e.verified_length, e.depth);
            ++failures;
        }
    std::printf("%d of %d criteria failed\n", failures, AcceptanceSuite::criterion_count);
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
