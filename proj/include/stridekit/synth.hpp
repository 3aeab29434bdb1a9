#pragma once

#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

#include "stridekit/types.hpp"

namespace stridekit {

// Parameters of one synthetic walk.
struct GaitProfile {
    int step_count = 10;
    double cadence_hz = 2.0;
    double stride_length_mean_m = 1.0;
    double stride_length_cv = 0.0;
    double peak_amplitude_m_s2 = 6.0;
    int fake_peak_count = 0;
    double fake_peak_amplitude_fraction = 0.6;
    double noise_sigma_m_s2 = 0.0;
    double sample_rate_hz = 50.0;
    std::uint64_t seed = 1;
};

void validate_profile(const GaitProfile& profile);

struct TrueStep {
    double start_t = 0.0;
    double peak_t = 0.0;
    double end_t = 0.0;
    double stride_length_m = 0.0;
};

struct GroundTruth {
    std::vector<TrueStep> true_steps;
    double true_distance_m = 0.0;
    std::vector<double> fake_peak_times;
};

// Trace layout constants. Each step owns a slot of (1/cadence) * jitter
// seconds (jitter = stride/mean, so longer strides give longer steps); the
// acceleration bump is a raised cosine filling the first kBumpDuty of the
// slot, the rest of the slot is quiet. Walks are bracketed by kLeadSeconds
// of sub-threshold sway so edge steps filter like interior ones. Fake peaks
// are half-bump-duration bumps dropped into the quiet gap after a seeded
// choice of interior steps.
inline constexpr double kGravityMs2 = 9.81;
inline constexpr double kBumpDuty = 0.55;
inline constexpr double kLeadSeconds = 1.0;
inline constexpr double kSwayFraction = 0.08;
inline constexpr double kEdgeTaperFraction = 0.3;
inline constexpr double kEdgeTaperCapMs2 = 1.55;
inline constexpr double kFakeGapOffset = 0.2;

// Deterministic for a fixed seed; timestamps are quantized to 6 decimals and
// axis values to 4, so a save/load round trip is bit exact.
std::pair<Trace, GroundTruth> generate_trace(const GaitProfile& profile);

struct CorpusEntry {
    std::string trace_path;
    std::string truth_path;
    std::uint64_t seed = 0;
    GaitProfile profile;
};

struct CorpusManifest {
    std::string rng_algorithm;
    std::vector<CorpusEntry> entries;
};

// Writes one trace CSV + ground-truth JSON per profile plus manifest.json in
// out_dir; returns the manifest. Throws IoError on filesystem failure.
CorpusManifest generate_corpus(const std::vector<GaitProfile>& profiles,
                               const std::filesystem::path& out_dir);

// The default evaluation sweep: 50 walks with true distances spanning
// 10..100 m at stride cv 0.2.
std::vector<GaitProfile> default_sweep_profiles();

}  // namespace stridekit
