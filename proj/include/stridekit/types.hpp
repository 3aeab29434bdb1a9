#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stridekit {

// One timestamped tri-axial accelerometer reading.
// t is trace-relative seconds; x/y/z are m/s^2 along device axes.
struct AccelSample {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// An accelerometer trace: strictly increasing timestamps, near-uniform
// spacing (within +-10% of the nominal sample period), length >= 2.
struct Trace {
    std::vector<AccelSample> samples;
    double sample_rate_hz = 0.0;
    std::map<std::string, std::string> meta;

    std::size_t size() const { return samples.size(); }
    double duration_s() const {
        return samples.empty() ? 0.0 : samples.back().t - samples.front().t;
    }
};

enum class SeriesKind { raw_magnitude, net_magnitude, filtered };

// Uniformly sampled scalar series derived from a trace.
// avg_magnitude carries the subtracted trace mean once the series has been
// converted to net magnitude (derivation metadata).
struct MagnitudeSeries {
    std::vector<double> values;
    double t0 = 0.0;
    double sample_rate_hz = 0.0;
    SeriesKind kind = SeriesKind::raw_magnitude;
    std::optional<double> avg_magnitude;

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }
    double time_at(std::size_t i) const {
        return t0 + static_cast<double>(i) / sample_rate_hz;
    }
};

// One violation found by validate_trace: which invariant failed and the first
// offending sample index.
struct TraceViolation {
    std::string invariant;
    std::size_t index = 0;
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct NonMonotonicTime : Error { using Error::Error; };
struct NonUniformSampling : Error { using Error::Error; };
struct TooShort : Error { using Error::Error; };
struct EmptySeries : Error { using Error::Error; };
struct InvalidConfig : Error { using Error::Error; };
struct InvalidProfile : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct EmptySteps : Error { using Error::Error; };
struct NonPositiveAverage : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };

}  // namespace stridekit
