#pragma once

#include <filesystem>

#include "stridekit/types.hpp"

namespace stridekit {

// Relative spacing tolerance of the uniformity contract.
inline constexpr double kSpacingTolerance = 0.10;

// Reads a trace CSV: optional leading `#key=value` comment lines, a `t,x,y,z`
// header, then one sample per row. The sample rate is inferred from the first
// and last timestamps. Throws ParseError / NonMonotonicTime /
// NonUniformSampling / TooShort.
Trace load_trace(const std::filesystem::path& path);

// Writes the trace CSV (6 decimals for t, 4 for the axes). Meta tags are
// emitted as `#key=value` lines before the header, sorted by key.
void save_trace(const Trace& trace, const std::filesystem::path& path);

// Checks every Trace invariant and reports violations; an empty report means
// the trace is well formed. Violations are data, not errors.
std::vector<TraceViolation> validate_trace(const Trace& trace);

}  // namespace stridekit
