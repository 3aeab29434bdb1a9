#include "stridekit/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "stridekit/json_io.hpp"
#include "stridekit/rng.hpp"
#include "stridekit/trace_io.hpp"

namespace stridekit {

namespace {

double quant(double v, double scale) {
    return std::llround(v * scale) / scale;
}

// Raised-cosine bump of the given amplitude on [start, start+dur).
double bump(double t, double start, double dur, double amp) {
    if (t < start || t >= start + dur) return 0.0;
    return amp / 2.0 * (1.0 - std::cos(2.0 * M_PI * (t - start) / dur));
}

std::vector<int> pick_interior_gaps(Rng& rng, int step_count, int fake_count) {
    // candidate gaps follow steps 1 .. n-2; walk-edge gaps are skipped
    std::vector<int> candidates;
    for (int k = 1; k + 1 < step_count; ++k) candidates.push_back(k);
    int take = std::min<int>(fake_count, static_cast<int>(candidates.size()));
    for (int i = 0; i < take; ++i) {
        auto j = i + static_cast<int>(rng.below(candidates.size() - i));
        std::swap(candidates[i], candidates[j]);
    }
    candidates.resize(take);
    std::sort(candidates.begin(), candidates.end());
    return candidates;
}

}  // namespace

void validate_profile(const GaitProfile& p) {
    if (p.step_count < 0) throw InvalidProfile("step_count must be non-negative");
    if (!(p.cadence_hz > 0.0)) throw InvalidProfile("cadence_hz must be positive");
    if (!(p.sample_rate_hz >= 4.0 * p.cadence_hz))
        throw InvalidProfile("sample_rate_hz must be at least 4x cadence_hz");
    if (!(p.stride_length_mean_m > 0.0)) throw InvalidProfile("stride_length_mean_m must be positive");
    if (!(p.stride_length_cv >= 0.0 && p.stride_length_cv < 1.0))
        throw InvalidProfile("stride_length_cv must lie in [0, 1)");
    if (!(p.peak_amplitude_m_s2 > 0.0)) throw InvalidProfile("peak_amplitude_m_s2 must be positive");
    if (p.fake_peak_count < 0) throw InvalidProfile("fake_peak_count must be non-negative");
    if (!(p.fake_peak_amplitude_fraction > 0.0 && p.fake_peak_amplitude_fraction < 1.0))
        throw InvalidProfile("fake_peak_amplitude_fraction must lie in (0, 1)");
    if (!(p.noise_sigma_m_s2 >= 0.0)) throw InvalidProfile("noise_sigma_m_s2 must be non-negative");
}

std::pair<Trace, GroundTruth> generate_trace(const GaitProfile& profile) {
    validate_profile(profile);
    Rng rng(profile.seed);

    const double period = 1.0 / profile.cadence_hz;
    const int n = profile.step_count;

    std::vector<double> strides(n);
    const double lo = profile.stride_length_mean_m *
                      std::max(0.1, 1.0 - 3.0 * profile.stride_length_cv);
    const double hi = profile.stride_length_mean_m * (1.0 + 3.0 * profile.stride_length_cv);
    for (double& s : strides) {
        s = profile.stride_length_mean_m * (1.0 + profile.stride_length_cv * rng.normal());
        s = std::clamp(s, lo, hi);
    }

    std::vector<double> slot_starts(n), slot_widths(n), bump_widths(n);
    double t = kLeadSeconds;
    for (int k = 0; k < n; ++k) {
        slot_starts[k] = t;
        slot_widths[k] = period * strides[k] / profile.stride_length_mean_m;
        bump_widths[k] = kBumpDuty * slot_widths[k];
        t += slot_widths[k];
    }
    const double walk_end = t;
    const double total = walk_end + kLeadSeconds;

    std::vector<int> fake_gaps = pick_interior_gaps(rng, n, profile.fake_peak_count);
    struct FakeBump { double start, width; };
    std::vector<FakeBump> fakes;
    for (int k : fake_gaps) {
        double gap_start = slot_starts[k] + bump_widths[k];
        double gap = slot_widths[k] - bump_widths[k];
        double apex = gap_start + kFakeGapOffset * gap;
        double width = bump_widths[k] / 2.0;
        fakes.push_back({apex - width / 2.0, width});
    }

    const double amp = profile.peak_amplitude_m_s2;
    const double fake_amp = profile.fake_peak_amplitude_fraction * amp;
    const double taper_amp = std::min(kEdgeTaperFraction * amp, kEdgeTaperCapMs2);
    const double dt = 1.0 / profile.sample_rate_hz;
    const auto nsamp = static_cast<std::size_t>(std::llround(total * profile.sample_rate_hz)) + 1;

    Trace trace;
    trace.sample_rate_hz = profile.sample_rate_hz;
    trace.meta["seed"] = std::to_string(profile.seed);
    trace.samples.reserve(nsamp);
    for (std::size_t i = 0; i < nsamp; ++i) {
        double tt = static_cast<double>(i) * dt;
        double z = kGravityMs2;
        for (int k = 0; k < n; ++k) z += bump(tt, slot_starts[k], bump_widths[k], amp);
        for (const auto& f : fakes) z += bump(tt, f.start, f.width, fake_amp);
        if (n > 0) {
            if (tt < kLeadSeconds) {
                auto k = static_cast<long>(std::floor((kLeadSeconds - tt) / period - 1e-12));
                double a = (k == 0) ? taper_amp : kSwayFraction * amp;
                z += bump(tt, kLeadSeconds - static_cast<double>(k + 1) * period,
                          kBumpDuty * period, a);
            } else if (tt >= walk_end) {
                auto k = static_cast<long>(std::floor((tt - walk_end) / period));
                double a = (k == 0) ? taper_amp : kSwayFraction * amp;
                z += bump(tt, walk_end + static_cast<double>(k) * period, kBumpDuty * period, a);
            }
        }
        double x = profile.noise_sigma_m_s2 > 0.0 ? profile.noise_sigma_m_s2 * rng.normal() : 0.0;
        double y = profile.noise_sigma_m_s2 > 0.0 ? profile.noise_sigma_m_s2 * rng.normal() : 0.0;
        double nz = profile.noise_sigma_m_s2 > 0.0 ? profile.noise_sigma_m_s2 * rng.normal() : 0.0;
        trace.samples.push_back({quant(tt, 1e6), quant(x, 1e4), quant(y, 1e4), quant(z + nz, 1e4)});
    }

    GroundTruth truth;
    truth.true_steps.reserve(n);
    double dist = 0.0;
    for (int k = 0; k < n; ++k) {
        truth.true_steps.push_back({slot_starts[k], slot_starts[k] + bump_widths[k] / 2.0,
                                    slot_starts[k] + bump_widths[k], strides[k]});
        dist += strides[k];
    }
    truth.true_distance_m = dist;
    for (std::size_t i = 0; i < fakes.size(); ++i)
        truth.fake_peak_times.push_back(fakes[i].start + fakes[i].width / 2.0);
    return {std::move(trace), std::move(truth)};
}

CorpusManifest generate_corpus(const std::vector<GaitProfile>& profiles,
                               const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create directory " + out_dir.string() + ": " + ec.message());

    CorpusManifest manifest;
    manifest.rng_algorithm = Rng::algorithm();
    char name[64];
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        auto [trace, truth] = generate_trace(profiles[i]);
        std::snprintf(name, sizeof name, "trace_%03zu.csv", i);
        std::string trace_name = name;
        std::snprintf(name, sizeof name, "truth_%03zu.json", i);
        std::string truth_name = name;
        save_trace(trace, out_dir / trace_name);
        save_json_file(to_json(truth), out_dir / truth_name);
        manifest.entries.push_back({trace_name, truth_name, profiles[i].seed, profiles[i]});
    }
    save_json_file(to_json(manifest), out_dir / "manifest.json");
    return manifest;
}

std::vector<GaitProfile> default_sweep_profiles() {
    std::vector<GaitProfile> profiles;
    profiles.reserve(50);
    for (int i = 0; i < 50; ++i) {
        GaitProfile p;
        p.step_count = static_cast<int>(std::lround(10.0 + i * 90.0 / 49.0));
        p.cadence_hz = 2.0;
        p.stride_length_mean_m = 1.0;
        p.stride_length_cv = 0.2;
        p.peak_amplitude_m_s2 = 8.0;
        p.noise_sigma_m_s2 = 0.05;
        p.sample_rate_hz = 50.0;
        p.seed = 300 + static_cast<std::uint64_t>(i);
        profiles.push_back(p);
    }
    return profiles;
}

}  // namespace stridekit
