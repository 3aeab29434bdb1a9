#pragma once

#include <utility>
#include <vector>

#include "stridekit/detector.hpp"
#include "stridekit/types.hpp"

namespace stridekit {

enum class StepCategory { short_step, medium_step, long_step };

const char* to_string(StepCategory category);

// Step weights and the nominal per-step length L0. A step is medium when its
// duration lies within medium_band_fraction of the average duration.
struct StepWeighting {
    double short_weight = 0.5;
    double medium_weight = 1.0;
    double long_weight = 1.5;
    double medium_band_fraction = 0.1;
    double base_step_length_m = 1.0;
};

void validate_weighting(const StepWeighting& weighting);

struct PerStep {
    StepEvent event;
    StepCategory category = StepCategory::medium_step;
    double alpha = 1.0;
};

struct DistanceEstimate {
    double distance_m = 0.0;
    std::size_t step_count = 0;
    std::vector<PerStep> per_step;
};

// Arithmetic mean of duration_s. Throws EmptySteps.
double mean_step_size(const std::vector<StepEvent>& steps);

// Weights one step against the average duration. Throws NonPositiveAverage.
std::pair<StepCategory, double> categorize(const StepEvent& step, double avg,
                                           const StepWeighting& weighting);

// distance = sum of base_step_length_m * alpha(step). Empty input yields a
// zero estimate.
DistanceEstimate estimate_distance(const std::vector<StepEvent>& steps,
                                   const StepWeighting& weighting);

// Online variant: categorizes each step against the running mean of the
// durations seen so far; the first step is always medium.
class StreamingDistanceEstimator {
public:
    explicit StreamingDistanceEstimator(const StepWeighting& weighting);

    PerStep push(const StepEvent& step);

    double distance_m() const { return distance_m_; }
    std::size_t step_count() const { return count_; }

private:
    StepWeighting weighting_;
    std::size_t count_ = 0;
    double duration_sum_ = 0.0;
    double distance_m_ = 0.0;
};

}  // namespace stridekit
