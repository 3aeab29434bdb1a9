#include "stridekit/filters.hpp"

#include <cmath>

namespace stridekit {

void validate_filter_params(const FilterParams& params, double sample_rate_hz) {
    if (!(params.kalman_process_var > 0.0))
        throw InvalidConfig("kalman_process_var must be positive");
    if (!(params.kalman_measurement_var > 0.0))
        throw InvalidConfig("kalman_measurement_var must be positive");
    if (!(params.highpass_cutoff_hz > 0.0) || !(params.highpass_cutoff_hz < sample_rate_hz / 2.0))
        throw InvalidConfig("highpass_cutoff_hz must lie in (0, sample_rate/2)");
    if (params.outlier_clamp_sigma && !(*params.outlier_clamp_sigma > 0.0))
        throw InvalidConfig("outlier_clamp_sigma must be positive when set");
}

double magnitude(double x, double y, double z) {
    return std::sqrt(x * x + y * y + z * z);
}

double magnitude(const AccelSample& sample) {
    return magnitude(sample.x, sample.y, sample.z);
}

MagnitudeSeries magnitude_series(const Trace& trace) {
    MagnitudeSeries out;
    out.values.reserve(trace.samples.size());
    for (const auto& s : trace.samples) out.values.push_back(magnitude(s));
    out.t0 = trace.samples.empty() ? 0.0 : trace.samples.front().t;
    out.sample_rate_hz = trace.sample_rate_hz;
    out.kind = SeriesKind::raw_magnitude;
    return out;
}

MagnitudeSeries net_magnitude(const MagnitudeSeries& series) {
    if (series.empty()) throw EmptySeries("net_magnitude: empty series");
    double sum = 0.0;
    for (double v : series.values) sum += v;
    double avg = sum / static_cast<double>(series.size());

    MagnitudeSeries out = series;
    for (double& v : out.values) v -= avg;
    out.kind = SeriesKind::net_magnitude;
    out.avg_magnitude = avg;
    return out;
}

MagnitudeSeries kalman_smooth(const MagnitudeSeries& series, const FilterParams& params) {
    if (series.empty()) throw EmptySeries("kalman_smooth: empty series");
    const double q = params.kalman_process_var;
    const double r = params.kalman_measurement_var;

    MagnitudeSeries out = series;
    out.kind = SeriesKind::filtered;
    double x = series.values[0];
    double p = r;
    out.values[0] = x;
    for (std::size_t i = 1; i < series.size(); ++i) {
        p += q;
        double k = p / (p + r);
        x += k * (series.values[i] - x);
        p *= 1.0 - k;
        out.values[i] = x;
    }
    return out;
}

MagnitudeSeries highpass(const MagnitudeSeries& series, const FilterParams& params) {
    if (series.size() < 2) throw EmptySeries("highpass: need at least 2 samples");
    const double dt = 1.0 / series.sample_rate_hz;
    const double rc = 1.0 / (2.0 * M_PI * params.highpass_cutoff_hz);
    const double a = rc / (rc + dt);

    MagnitudeSeries out = series;
    out.kind = SeriesKind::filtered;
    out.values[0] = 0.0;

    // Welford statistics over the emitted stream drive the optional clamp.
    std::size_t n = 1;
    double mean = 0.0;
    double m2 = 0.0;

    double y = 0.0;
    for (std::size_t i = 1; i < series.size(); ++i) {
        y = a * (y + series.values[i] - series.values[i - 1]);
        double emitted = y;
        if (params.outlier_clamp_sigma && n >= 8) {
            double sd = std::sqrt(m2 / static_cast<double>(n - 1));
            if (sd > 0.0) {
                double lo = mean - *params.outlier_clamp_sigma * sd;
                double hi = mean + *params.outlier_clamp_sigma * sd;
                if (emitted < lo) emitted = lo;
                if (emitted > hi) emitted = hi;
            }
        }
        out.values[i] = emitted;
        ++n;
        double d = emitted - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (emitted - mean);
    }
    return out;
}

MagnitudeSeries preprocess_pipeline(const Trace& trace, const FilterParams& params) {
    validate_filter_params(params, trace.sample_rate_hz);
    return highpass(kalman_smooth(net_magnitude(magnitude_series(trace)), params), params);
}

}  // namespace stridekit
