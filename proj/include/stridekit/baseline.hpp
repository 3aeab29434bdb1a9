#pragma once

#include <cstddef>

#include "stridekit/types.hpp"

namespace stridekit {

// The conventional estimator: count upward threshold crossings
// (value[i-1] <= threshold < value[i]) separated by at least min_interval_s,
// then multiply by a constant step length. Deliberately no max-selection, so
// a fake peak that dips below the threshold and re-crosses is double-counted.
std::size_t conventional_count(const MagnitudeSeries& series, double threshold,
                               double min_interval_s);

double conventional_distance(std::size_t count, double fixed_step_length_m);

// Default fixed step length of the comparator.
inline constexpr double kDefaultFixedStepLengthM = 0.7;

// Debounce used when the comparator runs inside eval/CLI. The conventional
// method has no interval guard of its own; this only suppresses jitter
// re-crossings within a few samples.
inline constexpr double kConventionalDebounceS = 0.1;

}  // namespace stridekit
