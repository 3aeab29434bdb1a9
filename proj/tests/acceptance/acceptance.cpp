// Acceptance suite: one criterion per function, one PASS/FAIL line each,
// non-zero exit if anything fails. Each criterion also enforces its runtime
// budget.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "stridekit/baseline.hpp"
#include "stridekit/detector.hpp"
#include "stridekit/distance.hpp"
#include "stridekit/eval.hpp"
#include "stridekit/filters.hpp"
#include "stridekit/json_io.hpp"
#include "stridekit/rng.hpp"
#include "stridekit/synth.hpp"
#include "stridekit/trace_io.hpp"
#include "support/helpers.hpp"
#include "support/reference_detector.hpp"

using namespace stridekit;
using stridekit::testing::make_series;
using stridekit::testing::reference_detect;
using stridekit::testing::TempDir;

namespace {

struct Criterion {
    std::string name;
    double budget_s;
    std::function<void(std::ostringstream&)> body;  // throws on failure
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define EXPECT(cond, msg)                                   \
    do {                                                    \
        if (!(cond)) throw Failure(std::string("expected ") + #cond + ": " + (msg)); \
    } while (0)

// ---------------------------------------------------------------- C1
void c1_exact_math(std::ostringstream& note) {
    EXPECT(magnitude(3.0, 4.0, 0.0) == 5.0, "pythagorean triple");
    EXPECT(magnitude(0.0, 0.0, 0.0) == 0.0, "zero vector");

    Rng rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 1 + rng.below(400);
        std::vector<double> vals(n);
        for (double& v : vals) v = 9.81 + 4.0 * rng.normal();
        auto net = net_magnitude(make_series(std::move(vals)));
        double mean = 0.0;
        for (double v : net.values) mean += v;
        mean /= static_cast<double>(net.size());
        EXPECT(std::abs(mean) < 1e-9, "net magnitude mean not within 1e-9");
    }

    // dyadic band fraction and averages make avg +- band exact, so the
    // boundary flip is pinned to the ulp
    StepWeighting w;
    w.medium_band_fraction = 0.125;
    auto weight_of = [&](double duration, double avg) {
        StepEvent s{0.0, duration / 2.0, duration, 2.0, duration};
        return categorize(s, avg, w);
    };
    for (double avg : {0.25, 0.5, 1.0, 1.75}) {
        double band = w.medium_band_fraction * avg;
        for (double boundary : {avg - band, avg + band}) {
            EXPECT(weight_of(boundary, avg).second == 1.0, "boundary itself is medium");
            double inward = std::nextafter(boundary, avg);
            EXPECT(weight_of(inward, avg).second == 1.0, "one ulp inside stays medium");
            double outward = std::nextafter(boundary, boundary < avg ? 0.0 : 10.0);
            double expected = boundary < avg ? 0.5 : 1.5;
            EXPECT(weight_of(outward, avg).second == expected, "one ulp outside flips");
        }
        EXPECT(weight_of(avg * 0.5, avg).second == 0.5, "short weight");
        EXPECT(weight_of(avg, avg).second == 1.0, "medium weight");
        EXPECT(weight_of(avg * 1.75, avg).second == 1.5, "long weight");
    }
    StepWeighting defaults;  // default 0.1 band: the canonical short/medium/long cases
    StepEvent s30{0.0, 0.15, 0.30, 2.0, 0.30}, s50{0.0, 0.25, 0.50, 2.0, 0.50},
        s80{0.0, 0.40, 0.80, 2.0, 0.80};
    EXPECT(categorize(s30, 0.5, defaults).second == 0.5, "0.30 vs avg 0.50 is short");
    EXPECT(categorize(s50, 0.5, defaults).second == 1.0, "0.50 vs avg 0.50 is medium");
    EXPECT(categorize(s80, 0.5, defaults).second == 1.5, "0.80 vs avg 0.50 is long");
    note << "eq1/eq2/eq3 table verified";
}

// ---------------------------------------------------------------- C2
void c2_oracle_equivalence(std::ostringstream& note) {
    Rng meta(20250810);
    const double noise_grid[3] = {0.0, 0.1, 0.3};
    FilterParams filter;
    DetectorConfig config;
    int events_total = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        GaitProfile profile;
        profile.step_count = static_cast<int>(meta.below(31));
        profile.cadence_hz = 1.2 + meta.uniform01() * 1.3;
        profile.sample_rate_hz = 20.0 + meta.uniform01() * 80.0;
        profile.stride_length_cv = meta.uniform01() * 0.3;
        profile.peak_amplitude_m_s2 = 3.0 + meta.uniform01() * 9.0;
        profile.fake_peak_count = static_cast<int>(meta.below(11));
        profile.noise_sigma_m_s2 = noise_grid[meta.below(3)];
        profile.seed = meta.below(1u << 31);
        auto [trace, truth] = generate_trace(profile);
        auto filtered = preprocess_pipeline(trace, filter);

        auto batch = detect_steps(filtered, config);
        auto streaming = detect_steps_streaming(filtered, config);
        auto reference = reference_detect(filtered, config);
        EXPECT(batch == streaming, "streaming disagrees at trial " + std::to_string(trial));
        EXPECT(batch == reference, "reference disagrees at trial " + std::to_string(trial));
        events_total += static_cast<int>(batch.size());
    }
    note << "1000 traces, " << events_total << " events, zero disagreements";
}

// ---------------------------------------------------------------- C3
void c3_clean_gait(std::ostringstream& note) {
    FilterParams filter;
    DetectorConfig config;
    StepWeighting weighting;
    const int sizes[] = {5, 8, 10, 12, 15, 20, 25, 30, 40, 50};
    int i = 0;
    for (int n : sizes) {
        GaitProfile profile;
        profile.step_count = n;
        profile.seed = 100 + static_cast<std::uint64_t>(i++);
        auto [trace, truth] = generate_trace(profile);
        auto events = detect_steps(preprocess_pipeline(trace, filter), config);
        auto score = score_detection(events, truth, kDefaultMatchWindowS);
        EXPECT(score.recall == 1.0, "recall 1.0 at n=" + std::to_string(n));
        EXPECT(score.precision == 1.0, "precision 1.0 at n=" + std::to_string(n));
        auto estimate = estimate_distance(events, weighting);
        EXPECT(estimate.distance_m == static_cast<double>(n),
               "distance == n*L0 exactly at n=" + std::to_string(n));
    }
    note << "recall=precision=1.0 and exact n*L0 on 10 corpus sizes";
}

// ---------------------------------------------------------------- C4
void c4_fake_peak_suppression(std::ostringstream& note) {
    FilterParams filter;
    DetectorConfig config;
    std::size_t fakes = 0, false_positives = 0, overcount = 0;
    for (int i = 0; i < 20; ++i) {
        GaitProfile profile;
        profile.step_count = 12 + (i % 5);
        profile.cadence_hz = 1.6;
        profile.sample_rate_hz = 100.0;
        profile.peak_amplitude_m_s2 = 10.0;
        profile.fake_peak_count = 3 + (i % 2);
        profile.seed = 200 + static_cast<std::uint64_t>(i);
        EXPECT(profile.fake_peak_amplitude_fraction * profile.peak_amplitude_m_s2 >
                   config.step_threshold,
               "fakes exceed the threshold");
        auto [trace, truth] = generate_trace(profile);
        auto filtered = preprocess_pipeline(trace, filter);
        auto events = detect_steps(filtered, config);
        auto score = score_detection(events, truth, kDefaultMatchWindowS);
        auto count = conventional_count(filtered, config.step_threshold, kConventionalDebounceS);

        fakes += truth.fake_peak_times.size();
        false_positives += score.false_positives;
        if (count > truth.true_steps.size()) overcount += count - truth.true_steps.size();
    }
    EXPECT(fakes > 0, "corpus contains fakes");
    EXPECT(static_cast<double>(false_positives) <= 0.1 * static_cast<double>(fakes),
           "proposed FP within 10% of fake count (got " + std::to_string(false_positives) +
               "/" + std::to_string(fakes) + ")");
    EXPECT(static_cast<double>(overcount) >= 0.5 * static_cast<double>(fakes),
           "conventional overcount at least 50% of fake count (got " +
               std::to_string(overcount) + "/" + std::to_string(fakes) + ")");
    note << fakes << " fakes: proposed FP=" << false_positives << ", conventional overcount="
         << overcount;
}

// ---------------------------------------------------------------- C5
void c5_error_accumulation(std::ostringstream& note) {
    FilterParams filter;
    DetectorConfig config;
    StepWeighting weighting;
    std::vector<DistanceTriple> triples;
    for (const auto& profile : default_sweep_profiles()) {
        auto [trace, truth] = generate_trace(profile);
        auto filtered = preprocess_pipeline(trace, filter);
        auto estimate = estimate_distance(detect_steps(filtered, config), weighting);
        auto count = conventional_count(filtered, config.step_threshold, kConventionalDebounceS);
        triples.push_back({truth.true_distance_m, estimate.distance_m,
                           conventional_distance(count, kDefaultFixedStepLengthM)});
    }
    auto report = error_report(triples);
    EXPECT(report.proposed_mae_m < report.baseline_mae_m, "proposed MAE below baseline MAE");
    EXPECT(report.proposed_slope < 0.5 * report.baseline_slope,
           "proposed |error| slope under half the baseline slope");
    char buf[160];
    std::snprintf(buf, sizeof buf, "MAE %.2f vs %.2f m; slope %.3f vs %.3f",
                  report.proposed_mae_m, report.baseline_mae_m, report.proposed_slope,
                  report.baseline_slope);
    note << buf;
}

// ---------------------------------------------------------------- C6
void c6_filter_properties(std::ostringstream& note) {
    FilterParams params;
    auto flat = highpass(make_series(std::vector<double>(256, 7.3)), params);
    for (std::size_t i = 1; i < flat.size(); ++i)
        EXPECT(flat.values[i] == 0.0, "high pass of a constant is identically 0");

    Rng rng(606);
    std::vector<double> noise(1000);
    for (double& v : noise) v = 0.5 * rng.normal();
    auto in = make_series(std::move(noise));
    auto smoothed = kalman_smooth(in, params);
    auto var = [](const std::vector<double>& v) {
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        double acc = 0.0;
        for (double x : v) acc += (x - mean) * (x - mean);
        return acc / static_cast<double>(v.size() - 1);
    };
    EXPECT(var(smoothed.values) < var(in.values), "Kalman reduces white-noise variance");

    Trace still;
    still.sample_rate_hz = 50.0;
    for (int i = 0; i < 250; ++i) still.samples.push_back({i / 50.0, 0.0, 0.0, 9.81});
    auto filtered = preprocess_pipeline(still, params);
    for (std::size_t i = 50; i < filtered.size(); ++i)
        EXPECT(std::abs(filtered.values[i]) <= 1e-6, "stationary pipeline under 1e-6 after 1 s");
    note << "DC rejection, variance reduction, stationary cancellation";
}

// ---------------------------------------------------------------- C7
void c7_determinism_round_trip(std::ostringstream& note) {
    TempDir dir("acceptance7");
    std::vector<GaitProfile> profiles;
    for (int i = 0; i < 3; ++i) {
        GaitProfile p;
        p.step_count = 8 + 4 * i;
        p.stride_length_cv = 0.2;
        p.noise_sigma_m_s2 = 0.1;
        p.fake_peak_count = 2;
        p.seed = 700 + static_cast<std::uint64_t>(i);
        profiles.push_back(p);
    }
    generate_corpus(profiles, dir.path() / "a");
    auto manifest = manifest_from_json(load_json_file(dir.path() / "a" / "manifest.json"));
    std::vector<GaitProfile> again;
    for (const auto& e : manifest.entries) again.push_back(e.profile);
    generate_corpus(again, dir.path() / "b");

    auto read_file = [](const std::filesystem::path& p) {
        std::ifstream in(p);
        return std::string{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    };
    for (int i = 0; i < 3; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "trace_%03d.csv", i);
        EXPECT(read_file(dir.path() / "a" / name) == read_file(dir.path() / "b" / name),
               "regenerated corpus CSVs byte-identical");
    }

    auto [trace, truth] = generate_trace(profiles[0]);
    save_trace(trace, dir.path() / "rt.csv");
    Trace loaded = load_trace(dir.path() / "rt.csv");
    EXPECT(loaded.samples.size() == trace.samples.size(), "round-trip sample count");
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
        EXPECT(loaded.samples[i].t == trace.samples[i].t, "round-trip t exact");
        EXPECT(loaded.samples[i].x == trace.samples[i].x, "round-trip x exact");
        EXPECT(loaded.samples[i].y == trace.samples[i].y, "round-trip y exact");
        EXPECT(loaded.samples[i].z == trace.samples[i].z, "round-trip z exact");
    }

#ifdef STRIDE_CLI_PATH
    auto run = [&](const std::string& cmd) {
        std::string full = cmd + " >/dev/null 2>&1";
        return std::system(full.c_str());
    };
    std::string cli = STRIDE_CLI_PATH;
    std::string manifest_path = (dir.path() / "a" / "manifest.json").string();
    EXPECT(run(cli + " compare " + manifest_path + " --report " +
               (dir.path() / "r1.json").string()) == 0,
           "cmd_compare run 1");
    EXPECT(run(cli + " compare " + manifest_path + " --report " +
               (dir.path() / "r2.json").string()) == 0,
           "cmd_compare run 2");
    EXPECT(read_file(dir.path() / "r1.json") == read_file(dir.path() / "r2.json"),
           "repeated cmd_compare reports byte-identical");
    EXPECT(read_file(dir.path() / "r1.plot.csv") == read_file(dir.path() / "r2.plot.csv"),
           "repeated cmd_compare plot CSVs byte-identical");
    note << "corpus, trace round trip and cmd_compare all byte-stable";
#else
    note << "corpus and trace round trip byte-stable";
#endif
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"C1 exact-math suite", 1.0, c1_exact_math},
        {"C2 oracle equivalence (1000 traces)", 30.0, c2_oracle_equivalence},
        {"C3 clean-gait recovery", 5.0, c3_clean_gait},
        {"C4 fake-peak suppression", 5.0, c4_fake_peak_suppression},
        {"C5 error-accumulation separation", 60.0, c5_error_accumulation},
        {"C6 filter properties", 5.0, c6_filter_properties},
        {"C7 determinism & round-trip", 10.0, c7_determinism_round_trip},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::ostringstream note;
        auto begin = std::chrono::steady_clock::now();
        std::string error;
        try {
            criterion.body(note);
        } catch (const std::exception& e) {
            error = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
        bool ok = error.empty() && elapsed < criterion.budget_s;
        if (!ok) ++failures;
        std::printf("[%s] %s (%.2fs, budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
                    criterion.name.c_str(), elapsed, criterion.budget_s,
                    error.empty() ? (note.str().empty() ? "" : " -- ") : " -- ",
                    error.empty() ? note.str().c_str() : error.c_str());
        if (error.empty() && elapsed >= criterion.budget_s)
            std::printf("       runtime budget exceeded\n");
    }
    return failures == 0 ? 0 : 1;
}
