#pragma once

#include <string>
#include <vector>

#include "stridekit/detector.hpp"
#include "stridekit/synth.hpp"
#include "stridekit/types.hpp"

namespace stridekit {

inline constexpr double kDefaultMatchWindowS = 0.3;

struct DetectionScore {
    std::size_t true_positives = 0;
    std::size_t false_positives = 0;
    std::size_t false_negatives = 0;
    double precision = 1.0;
    double recall = 1.0;
};

// Greedy one-to-one matching of detected peak times to ground-truth peak
// times within match_window_s, earliest detection first.
DetectionScore score_detection(const std::vector<StepEvent>& events,
                               const GroundTruth& truth, double match_window_s);

struct DistanceTriple {
    double true_distance_m = 0.0;
    double proposed_m = 0.0;
    double baseline_m = 0.0;
};

struct ErrorReport {
    double proposed_mae_m = 0.0;
    double baseline_mae_m = 0.0;
    double proposed_slope = 0.0;  // least-squares slope of |error| vs true distance
    double baseline_slope = 0.0;
};

// Throws DegenerateInput with fewer than two entries or when all true
// distances coincide.
ErrorReport error_report(const std::vector<DistanceTriple>& estimates);

struct TableRow {
    std::string trace_id;
    double true_distance_m = 0.0;
    std::size_t true_steps = 0;
    std::size_t est_steps = 0;
    double est_distance_m = 0.0;
    double baseline_distance_m = 0.0;
    double abs_error_m = 0.0;
};

// Aligned text table; header only for empty input.
std::string table_report(const std::vector<TableRow>& rows);

// Plot-ready CSV: true_distance,proposed_error,baseline_error (absolute errors).
std::string plot_csv(const std::vector<DistanceTriple>& estimates);

}  // namespace stridekit
