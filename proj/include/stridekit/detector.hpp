#pragma once

#include <optional>
#include <vector>

#include "stridekit/types.hpp"

namespace stridekit {

struct DetectorConfig {
    double step_threshold = 1.0;      // m/s^2 on the filtered net-magnitude scale
    int rise_count = 3;               // consecutive increasing values that open a step
    int fall_count = 2;               // consecutive increasing values that close it
    double min_step_interval_s = 0.25;
    double max_step_duration_s = 2.0;
};

// Throws InvalidConfig unless threshold > 0, rise_count >= 2, fall_count >= 2
// and 0 < min_step_interval_s < max_step_duration_s.
void validate_detector_config(const DetectorConfig& config);

// One detected step. duration_s == end_t - start_t.
struct StepEvent {
    double start_t = 0.0;
    double peak_t = 0.0;
    double end_t = 0.0;
    double peak_value = 0.0;
    double duration_s = 0.0;

    bool operator==(const StepEvent&) const = default;
};

enum class DetectorPhase { idle, rising, above_threshold, falling };

// Single-pass step detector over a filtered net-magnitude stream.
//
// Phases, driven by the strictly-increasing run of recent values:
//   idle -> rising          once rise_count consecutive strictly increasing
//                           values are seen; the first of them is the
//                           pending step start.
//   rising -> idle          if the increasing run breaks before the
//                           threshold is crossed.
//   rising -> above         when a value exceeds step_threshold; from here
//                           the above-threshold maximum is tracked (earliest
//                           sample wins ties) -- the "peak vector" whose max
//                           is the real peak.
//   above -> falling        when the value drops back to or below the
//                           threshold; the tracked maximum becomes the peak.
//   falling -> emit + idle  once fall_count consecutive strictly increasing
//                           values are seen; the first of them is the step
//                           end. The candidate is discarded (not emitted) if
//                           its peak is within min_step_interval_s of the
//                           previously emitted peak or its duration exceeds
//                           max_step_duration_s.
// All transitions cascade within one sample, so a value may complete the
// rise and cross the threshold at once. A trace ending mid-step emits
// nothing for the partial step.
class StreamingStepDetector {
public:
    explicit StreamingStepDetector(const DetectorConfig& config);

    // Feeds one sample; returns the step confirmed at this sample, if any.
    std::optional<StepEvent> push(double t, double value);

    // Drops any partial in-progress step and returns to idle; the
    // min-interval guard still remembers the last emitted peak.
    void finish();

    void reset();

    DetectorPhase phase() const { return phase_; }
    const DetectorConfig& config() const { return config_; }

private:
    DetectorConfig config_;
    DetectorPhase phase_ = DetectorPhase::idle;

    bool have_prev_ = false;
    double prev_value_ = 0.0;
    int run_length_ = 0;        // length of the strictly increasing run ending now
    double run_start_t_ = 0.0;  // time of that run's first value

    double pending_start_t_ = 0.0;
    bool peak_valid_ = false;
    double peak_t_ = 0.0;
    double peak_value_ = 0.0;

    bool have_last_peak_ = false;
    double last_peak_t_ = 0.0;
};

// Batch detection: one left-to-right pass over the series. Equivalent to
// feeding StreamingStepDetector sample by sample.
std::vector<StepEvent> detect_steps(const MagnitudeSeries& series, const DetectorConfig& config);

// Convenience wrapper that drives a StreamingStepDetector over the series.
std::vector<StepEvent> detect_steps_streaming(const MagnitudeSeries& series,
                                              const DetectorConfig& config);

}  // namespace stridekit
