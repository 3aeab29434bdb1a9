#pragma once

#include <optional>

#include "stridekit/types.hpp"

namespace stridekit {

// Smoothing / gravity-removal parameters. The outlier clamp is off by
// default; when set, filtered values beyond clamp*sigma of the running output
// statistics are clipped to that bound.
struct FilterParams {
    double kalman_process_var = 1e-3;      // (m/s^2)^2 per sample step
    double kalman_measurement_var = 1e-1;  // (m/s^2)^2
    double highpass_cutoff_hz = 0.3;
    std::optional<double> outlier_clamp_sigma;
};

// Throws InvalidConfig unless variances are positive and the cutoff lies in
// (0, sample_rate/2).
void validate_filter_params(const FilterParams& params, double sample_rate_hz);

// Euclidean norm of one sample's acceleration vector.
double magnitude(double x, double y, double z);
double magnitude(const AccelSample& sample);

// Per-sample magnitude of a whole trace as a raw_magnitude series.
MagnitudeSeries magnitude_series(const Trace& trace);

// Subtracts the series mean; the mean is recorded as avg_magnitude on the
// result. Throws EmptySeries.
MagnitudeSeries net_magnitude(const MagnitudeSeries& series);

// Scalar constant-level Kalman filter. State = current smoothed level,
// initialized to the first sample with variance = measurement_var; each step
// predicts with process_var and updates with measurement_var.
MagnitudeSeries kalman_smooth(const MagnitudeSeries& series, const FilterParams& params);

// First-order high pass, y[i] = a*(y[i-1] + x[i] - x[i-1]) with
// a = rc/(rc + dt), rc = 1/(2*pi*cutoff), y[0] = 0. When the clamp is
// enabled, output values beyond clamp*sigma of the running output mean are
// clipped (statistics follow the clipped stream; clipping starts once eight
// values have been seen). Throws EmptySeries for series shorter than 2.
MagnitudeSeries highpass(const MagnitudeSeries& series, const FilterParams& params);

// magnitude -> net magnitude -> Kalman -> high pass, in that order.
MagnitudeSeries preprocess_pipeline(const Trace& trace, const FilterParams& params);

// Streaming (non-reference) variant of Eq-2 mean removal: exponential moving
// average of the magnitude with a fixed smoothing constant.
class StreamingNetMagnitude {
public:
    explicit StreamingNetMagnitude(double smoothing = 0.01) : alpha_(smoothing) {}

    double push(double mag) {
        if (!seen_) {
            avg_ = mag;
            seen_ = true;
        } else {
            avg_ += alpha_ * (mag - avg_);
        }
        return mag - avg_;
    }
    double average() const { return avg_; }

private:
    double alpha_;
    double avg_ = 0.0;
    bool seen_ = false;
};

}  // namespace stridekit
