#include "stridekit/baseline.hpp"

namespace stridekit {

std::size_t conventional_count(const MagnitudeSeries& series, double threshold,
                               double min_interval_s) {
    if (series.empty()) throw EmptySeries("conventional_count: empty series");
    std::size_t count = 0;
    bool have_last = false;
    double last_t = 0.0;
    for (std::size_t i = 1; i < series.size(); ++i) {
        if (series.values[i - 1] <= threshold && series.values[i] > threshold) {
            double t = series.time_at(i);
            if (!have_last || t - last_t >= min_interval_s) {
                ++count;
                have_last = true;
                last_t = t;
            }
        }
    }
    return count;
}

double conventional_distance(std::size_t count, double fixed_step_length_m) {
    if (!(fixed_step_length_m > 0.0))
        throw InvalidConfig("fixed_step_length_m must be positive");
    return static_cast<double>(count) * fixed_step_length_m;
}

}  // namespace stridekit
