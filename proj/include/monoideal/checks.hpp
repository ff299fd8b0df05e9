#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "monoideal/budget.hpp"

namespace monoideal {

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
    double seconds;
};

struct CheckOptions {
    std::uint64_t seed = 20240917;
    /// Per-criterion wall clock limit; a criterion over the limit fails.
    double timeout_seconds = 300.0;
    Budget budget;
};

/// One (verified_length, depth) observation behind the lower-bound criterion.
struct SoundnessEntry {
    std::string label;
    std::size_t verified_length;
    std::size_t depth;
};

/// The acceptance criteria as runnable checks. Counts and limits are fixed
/// here; only the seed, timeout and oracle budgets are configurable.
class AcceptanceSuite {
public:
    static constexpr int criterion_count = 8;
    static constexpr double cycle_depth_time_limit = 300.0;  // criterion 1, seconds
    static constexpr std::size_t random_transform_instances = 500;
    static constexpr std::size_t random_ass_instances = 300;
    static constexpr std::size_t random_corollary_instances = 300;
    static constexpr std::size_t min_completions = 3;

    explicit AcceptanceSuite(CheckOptions options = {}) : options_(options) {}

    /// id in 1..8; Errc::domain otherwise.
    CriterionResult run(int id);
    std::vector<CriterionResult> run_all();

    const std::vector<SoundnessEntry>& soundness_log() const noexcept { return log_; }

private:
    CriterionResult cycle_depth();
    CriterionResult sequence_realization();
    CriterionResult transform_agreement();
    CriterionResult ass_example();
    CriterionResult embedded_structure();
    CriterionResult corollaries();
    CriterionResult unicyclic_depth();
    CriterionResult lower_bound_soundness();

    void record(std::string label, std::size_t verified, std::size_t depth);

    CheckOptions options_;
    std::vector<SoundnessEntry> log_;
    bool sequences_logged_ = false;
};

}  // namespace monoideal
