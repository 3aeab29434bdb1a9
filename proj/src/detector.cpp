#include "stridekit/detector.hpp"

namespace stridekit {

void validate_detector_config(const DetectorConfig& c) {
    if (!(c.step_threshold > 0.0)) throw InvalidConfig("step_threshold must be positive");
    if (c.rise_count < 2) throw InvalidConfig("rise_count must be at least 2");
    if (c.fall_count < 2) throw InvalidConfig("fall_count must be at least 2");
    if (!(c.min_step_interval_s > 0.0) || !(c.min_step_interval_s < c.max_step_duration_s))
        throw InvalidConfig("need 0 < min_step_interval_s < max_step_duration_s");
}

StreamingStepDetector::StreamingStepDetector(const DetectorConfig& config) : config_(config) {
    validate_detector_config(config);
}

std::optional<StepEvent> StreamingStepDetector::push(double t, double value) {
    if (!have_prev_ || !(value > prev_value_)) {
        run_length_ = 1;
        run_start_t_ = t;
    } else {
        ++run_length_;
    }
    prev_value_ = value;
    have_prev_ = true;

    std::optional<StepEvent> emitted;
    for (;;) {
        switch (phase_) {
            case DetectorPhase::idle:
                if (run_length_ >= config_.rise_count) {
                    phase_ = DetectorPhase::rising;
                    pending_start_t_ = run_start_t_;
                    continue;
                }
                return emitted;

            case DetectorPhase::rising:
                if (run_length_ == 1) {  // increasing run broke before the crossing
                    phase_ = DetectorPhase::idle;
                    continue;
                }
                if (value > config_.step_threshold) {
                    phase_ = DetectorPhase::above_threshold;
                    peak_valid_ = true;
                    peak_t_ = t;
                    peak_value_ = value;
                }
                return emitted;

            case DetectorPhase::above_threshold:
                if (value > config_.step_threshold) {
                    if (value > peak_value_) {  // earliest sample wins ties
                        peak_t_ = t;
                        peak_value_ = value;
                    }
                } else {
                    phase_ = DetectorPhase::falling;
                }
                return emitted;

            case DetectorPhase::falling:
                if (run_length_ >= config_.fall_count) {
                    double end_t = run_start_t_;
                    bool keep = true;
                    if (have_last_peak_ && peak_t_ - last_peak_t_ < config_.min_step_interval_s)
                        keep = false;
                    if (end_t - pending_start_t_ > config_.max_step_duration_s) keep = false;
                    if (keep) {
                        have_last_peak_ = true;
                        last_peak_t_ = peak_t_;
                        emitted = StepEvent{pending_start_t_, peak_t_, end_t, peak_value_,
                                            end_t - pending_start_t_};
                    }
                    phase_ = DetectorPhase::idle;
                    peak_valid_ = false;
                    continue;  // re-evaluate this sample from idle
                }
                return emitted;
        }
    }
}

void StreamingStepDetector::finish() {
    phase_ = DetectorPhase::idle;
    peak_valid_ = false;
    have_prev_ = false;
    run_length_ = 0;
}

void StreamingStepDetector::reset() {
    finish();
    have_last_peak_ = false;
}

std::vector<StepEvent> detect_steps(const MagnitudeSeries& series, const DetectorConfig& config) {
    validate_detector_config(config);
    const auto& v = series.values;
    const std::size_t n = v.size();

    std::vector<StepEvent> events;
    DetectorPhase phase = DetectorPhase::idle;
    int run_length = 0;
    std::size_t run_start = 0;
    std::size_t pending_start = 0;
    std::size_t peak_i = 0;
    bool have_last_peak = false;
    double last_peak_t = 0.0;

    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || !(v[i] > v[i - 1])) {
            run_length = 1;
            run_start = i;
        } else {
            ++run_length;
        }

        bool again = true;
        while (again) {
            again = false;
            switch (phase) {
                case DetectorPhase::idle:
                    if (run_length >= config.rise_count) {
                        phase = DetectorPhase::rising;
                        pending_start = run_start;
                        again = true;
                    }
                    break;
                case DetectorPhase::rising:
                    if (run_length == 1) {
                        phase = DetectorPhase::idle;
                        again = true;
                    } else if (v[i] > config.step_threshold) {
                        phase = DetectorPhase::above_threshold;
                        peak_i = i;
                    }
                    break;
                case DetectorPhase::above_threshold:
                    if (v[i] > config.step_threshold) {
                        if (v[i] > v[peak_i]) peak_i = i;
                    } else {
                        phase = DetectorPhase::falling;
                    }
                    break;
                case DetectorPhase::falling:
                    if (run_length >= config.fall_count) {
                        double start_t = series.time_at(pending_start);
                        double peak_t = series.time_at(peak_i);
                        double end_t = series.time_at(run_start);
                        bool keep = true;
                        if (have_last_peak && peak_t - last_peak_t < config.min_step_interval_s)
                            keep = false;
                        if (end_t - start_t > config.max_step_duration_s) keep = false;
                        if (keep) {
                            have_last_peak = true;
                            last_peak_t = peak_t;
                            events.push_back({start_t, peak_t, end_t, v[peak_i], end_t - start_t});
                        }
                        phase = DetectorPhase::idle;
                        again = true;
                    }
                    break;
            }
        }
    }
    return events;
}

std::vector<StepEvent> detect_steps_streaming(const MagnitudeSeries& series,
                                              const DetectorConfig& config) {
    StreamingStepDetector detector(config);
    std::vector<StepEvent> events;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (auto ev = detector.push(series.time_at(i), series.values[i])) events.push_back(*ev);
    }
    detector.finish();
    return events;
}

}  // namespace stridekit
