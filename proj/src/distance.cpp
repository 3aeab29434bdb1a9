#include "stridekit/distance.hpp"

#include <cmath>

namespace stridekit {

const char* to_string(StepCategory category) {
    switch (category) {
        case StepCategory::short_step: return "short";
        case StepCategory::medium_step: return "medium";
        case StepCategory::long_step: return "long";
    }
    return "?";
}

void validate_weighting(const StepWeighting& w) {
    if (!(0.0 < w.short_weight && w.short_weight < w.medium_weight &&
          w.medium_weight < w.long_weight))
        throw InvalidConfig("need 0 < short_weight < medium_weight < long_weight");
    if (!(w.medium_band_fraction >= 0.0 && w.medium_band_fraction < 1.0))
        throw InvalidConfig("medium_band_fraction must lie in [0, 1)");
    if (!(w.base_step_length_m > 0.0)) throw InvalidConfig("base_step_length_m must be positive");
}

double mean_step_size(const std::vector<StepEvent>& steps) {
    if (steps.empty()) throw EmptySteps("mean_step_size: no steps");
    double sum = 0.0;
    for (const auto& s : steps) sum += s.duration_s;
    return sum / static_cast<double>(steps.size());
}

std::pair<StepCategory, double> categorize(const StepEvent& step, double avg,
                                           const StepWeighting& weighting) {
    if (!(avg > 0.0)) throw NonPositiveAverage("categorize: average must be positive");
    double band = weighting.medium_band_fraction * avg;
    if (std::abs(step.duration_s - avg) <= band)
        return {StepCategory::medium_step, weighting.medium_weight};
    if (step.duration_s < avg) return {StepCategory::short_step, weighting.short_weight};
    return {StepCategory::long_step, weighting.long_weight};
}

DistanceEstimate estimate_distance(const std::vector<StepEvent>& steps,
                                   const StepWeighting& weighting) {
    validate_weighting(weighting);
    DistanceEstimate estimate;
    if (steps.empty()) return estimate;
    double avg = mean_step_size(steps);
    estimate.per_step.reserve(steps.size());
    for (const auto& s : steps) {
        auto [category, alpha] = categorize(s, avg, weighting);
        estimate.per_step.push_back({s, category, alpha});
        estimate.distance_m += weighting.base_step_length_m * alpha;
    }
    estimate.step_count = estimate.per_step.size();
    return estimate;
}

StreamingDistanceEstimator::StreamingDistanceEstimator(const StepWeighting& weighting)
    : weighting_(weighting) {
    validate_weighting(weighting);
}

PerStep StreamingDistanceEstimator::push(const StepEvent& step) {
    duration_sum_ += step.duration_s;
    ++count_;
    PerStep entry;
    entry.event = step;
    if (count_ == 1) {
        entry.category = StepCategory::medium_step;
        entry.alpha = weighting_.medium_weight;
    } else {
        double avg = duration_sum_ / static_cast<double>(count_);
        auto [category, alpha] = categorize(step, avg, weighting_);
        entry.category = category;
        entry.alpha = alpha;
    }
    distance_m_ += weighting_.base_step_length_m * entry.alpha;
    return entry;
}

}  // namespace stridekit
