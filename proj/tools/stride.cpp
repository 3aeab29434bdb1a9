// stride: step detection and travelled-distance estimation over accelerometer
// trace CSVs. Subcommands: detect, estimate, synth, compare.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stridekit/baseline.hpp"
#include "stridekit/detector.hpp"
#include "stridekit/distance.hpp"
#include "stridekit/eval.hpp"
#include "stridekit/filters.hpp"
#include "stridekit/json_io.hpp"
#include "stridekit/synth.hpp"
#include "stridekit/trace_io.hpp"

namespace {

using namespace stridekit;

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

struct AppConfig {
    FilterParams filter;
    DetectorConfig detector;
    StepWeighting weighting;
    double fixed_step_length_m = kDefaultFixedStepLengthM;
    double match_window_s = kDefaultMatchWindowS;
};

void apply_config_json(AppConfig& config, const json& j) {
    if (j.contains("filter")) config.filter = filter_params_from_json(j["filter"]);
    if (j.contains("detector")) config.detector = detector_config_from_json(j["detector"]);
    if (j.contains("weighting")) config.weighting = weighting_from_json(j["weighting"]);
    if (j.contains("baseline"))
        config.fixed_step_length_m =
            j["baseline"].value("fixed_step_length_m", config.fixed_step_length_m);
    if (j.contains("eval"))
        config.match_window_s = j["eval"].value("match_window_s", config.match_window_s);
}

// defaults < $STRIDE_CONFIG < --config; flags are applied by the caller after this
AppConfig load_config(const std::string& config_flag) {
    AppConfig config;
    std::string path = config_flag;
    if (path.empty()) {
        if (const char* env = std::getenv("STRIDE_CONFIG")) path = env;
    }
    if (!path.empty()) apply_config_json(config, load_json_file(path));
    return config;
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void print_events_text(const std::vector<StepEvent>& events) {
    std::printf("%-6s %12s %12s %12s %12s %12s\n", "step", "start_t", "peak_t", "end_t",
                "peak_value", "duration_s");
    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto& e = events[i];
        std::printf("%-6zu %12.6f %12.6f %12.6f %12.6f %12.6f\n", i + 1, e.start_t, e.peak_t,
                    e.end_t, e.peak_value, e.duration_s);
    }
    std::printf("steps: %zu\n", events.size());
}

struct TraceRun {
    Trace trace;
    MagnitudeSeries filtered;
    std::vector<StepEvent> events;
};

TraceRun run_detection(const std::string& trace_path, const AppConfig& config) {
    TraceRun run;
    run.trace = load_trace(trace_path);
    run.filtered = preprocess_pipeline(run.trace, config.filter);
    run.events = detect_steps(run.filtered, config.detector);
    return run;
}

int cmd_detect(const std::string& trace_path, const AppConfig& config, bool as_json) {
    auto run = run_detection(trace_path, config);
    if (as_json)
        std::cout << to_json(run.events).dump(2) << '\n';
    else
        print_events_text(run.events);
    return kExitOk;
}

int cmd_estimate(const std::string& trace_path, const AppConfig& config, bool as_json) {
    auto run = run_detection(trace_path, config);
    auto estimate = estimate_distance(run.events, config.weighting);
    auto count = conventional_count(run.filtered, config.detector.step_threshold,
                                    kConventionalDebounceS);
    auto baseline = conventional_distance(count, config.fixed_step_length_m);
    if (as_json) {
        json j;
        j["proposed"] = to_json(estimate);
        j["baseline"] = {{"count", count}, {"distance_m", round6(baseline)}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::printf("proposed:  %s m over %zu steps\n", fmt6(estimate.distance_m).c_str(),
                    estimate.step_count);
        std::printf("baseline:  %s m over %zu crossings (fixed length %s m)\n",
                    fmt6(baseline).c_str(), count, fmt6(config.fixed_step_length_m).c_str());
    }
    return kExitOk;
}

int cmd_synth(const std::string& profile_path, const std::string& out_dir, bool default_sweep,
              std::optional<std::uint64_t> seed) {
    std::vector<GaitProfile> profiles;
    if (default_sweep) {
        profiles = default_sweep_profiles();
    } else {
        json j = load_json_file(profile_path);
        if (j.is_array())
            for (const auto& e : j) profiles.push_back(profile_from_json(e));
        else
            profiles.push_back(profile_from_json(j));
    }
    if (seed) {
        for (std::size_t i = 0; i < profiles.size(); ++i)
            profiles[i].seed = *seed + static_cast<std::uint64_t>(i);
    }
    for (const auto& p : profiles) validate_profile(p);
    auto manifest = generate_corpus(profiles, out_dir);
    std::cout << (std::filesystem::path(out_dir) / "manifest.json").string() << '\n';
    std::cout << "entries: " << manifest.entries.size() << '\n';
    return kExitOk;
}

int cmd_compare(const std::string& manifest_path, const AppConfig& config,
                const std::string& report_path) {
    auto manifest_dir = std::filesystem::path(manifest_path).parent_path();
    auto manifest = manifest_from_json(load_json_file(manifest_path));

    std::vector<TableRow> rows;
    std::vector<DistanceTriple> triples;
    std::size_t tp = 0, fp = 0, fn = 0;
    for (const auto& entry : manifest.entries) {
        auto run = run_detection((manifest_dir / entry.trace_path).string(), config);
        auto truth = ground_truth_from_json(load_json_file(manifest_dir / entry.truth_path));
        auto estimate = estimate_distance(run.events, config.weighting);
        auto count = conventional_count(run.filtered, config.detector.step_threshold,
                                        kConventionalDebounceS);
        auto baseline = conventional_distance(count, config.fixed_step_length_m);
        auto score = score_detection(run.events, truth, config.match_window_s);
        tp += score.true_positives;
        fp += score.false_positives;
        fn += score.false_negatives;

        TableRow row;
        row.trace_id = std::filesystem::path(entry.trace_path).stem().string();
        row.true_distance_m = truth.true_distance_m;
        row.true_steps = truth.true_steps.size();
        row.est_steps = estimate.step_count;
        row.est_distance_m = estimate.distance_m;
        row.baseline_distance_m = baseline;
        row.abs_error_m = std::abs(estimate.distance_m - truth.true_distance_m);
        rows.push_back(row);
        triples.push_back({truth.true_distance_m, estimate.distance_m, baseline});
    }

    std::cout << table_report(rows);

    json report;
    report["rows"] = to_json(rows);
    report["detection"] = {{"true_positives", tp}, {"false_positives", fp},
                           {"false_negatives", fn}};
    std::optional<ErrorReport> errors;
    try {
        errors = error_report(triples);
        std::cout << "proposed_mae_m:  " << fmt6(errors->proposed_mae_m) << '\n'
                  << "baseline_mae_m:  " << fmt6(errors->baseline_mae_m) << '\n'
                  << "proposed_slope:  " << fmt6(errors->proposed_slope) << '\n'
                  << "baseline_slope:  " << fmt6(errors->baseline_slope) << '\n';
        report["error_report"] = to_json(*errors);
    } catch (const DegenerateInput& e) {
        std::cout << "error summary unavailable: " << e.what() << '\n';
        report["error_report"] = nullptr;
    }

    if (!report_path.empty()) {
        save_json_file(report, report_path);
        auto plot_path = std::filesystem::path(report_path);
        plot_path.replace_extension(".plot.csv");
        std::ofstream plot(plot_path);
        if (!plot) throw IoError("cannot write " + plot_path.string());
        plot << plot_csv(triples);
        std::cout << "report: " << report_path << '\n'
                  << "plot:   " << plot_path.string() << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"step detection and travelled-distance estimation toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (else $STRIDE_CONFIG)");

    // detect
    auto* detect = app.add_subcommand("detect", "detect steps in a trace CSV");
    std::string detect_trace;
    bool detect_json = false, detect_text = false;
    double threshold = 0.0;
    detect->add_option("trace", detect_trace, "trace CSV path")->required();
    detect->add_flag("--json", detect_json, "JSON output");
    detect->add_flag("--text", detect_text, "plain-text output (default)");
    detect->add_option("--threshold", threshold, "step threshold override (m/s^2)");

    // estimate
    auto* estimate = app.add_subcommand("estimate", "estimate travelled distance");
    std::string estimate_trace;
    bool estimate_json = false, estimate_text = false;
    double base_length = 0.0, fixed_length = 0.0, est_threshold = 0.0;
    estimate->add_option("trace", estimate_trace, "trace CSV path")->required();
    estimate->add_flag("--json", estimate_json, "JSON output");
    estimate->add_flag("--text", estimate_text, "plain-text output (default)");
    estimate->add_option("--base-length", base_length, "nominal step length L0 (m)");
    estimate->add_option("--fixed-length", fixed_length, "baseline fixed step length (m)");
    estimate->add_option("--threshold", est_threshold, "step threshold override (m/s^2)");

    // synth
    auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
    std::string profile_path, out_dir;
    bool default_sweep = false;
    std::uint64_t seed_value = 0;
    synth->add_option("profile", profile_path,
                      "GaitProfile JSON (object or array); omit with --default-sweep");
    synth->add_option("out_dir", out_dir, "output directory")->required();
    synth->add_flag("--default-sweep", default_sweep, "generate the default 50-trace sweep");
    auto* seed_opt = synth->add_option("--seed", seed_value, "seed base override");

    // compare
    auto* compare = app.add_subcommand("compare", "run both estimators over a corpus");
    std::string manifest_path, report_path;
    double cmp_base_length = 0.0, cmp_fixed_length = 0.0, cmp_threshold = 0.0;
    compare->add_option("manifest", manifest_path, "corpus manifest.json")->required();
    compare->add_option("--report", report_path, "write JSON report (and .plot.csv) here");
    compare->add_option("--base-length", cmp_base_length, "nominal step length L0 (m)");
    compare->add_option("--fixed-length", cmp_fixed_length, "baseline fixed step length (m)");
    compare->add_option("--threshold", cmp_threshold, "step threshold override (m/s^2)");

    CLI11_PARSE(app, argc, argv);

    try {
        AppConfig config = load_config(config_path);

        if (detect->parsed()) {
            if (detect->count("--threshold")) config.detector.step_threshold = threshold;
            validate_detector_config(config.detector);
            return cmd_detect(detect_trace, config, detect_json && !detect_text);
        }
        if (estimate->parsed()) {
            if (estimate->count("--threshold")) config.detector.step_threshold = est_threshold;
            if (estimate->count("--base-length")) config.weighting.base_step_length_m = base_length;
            if (estimate->count("--fixed-length")) config.fixed_step_length_m = fixed_length;
            validate_detector_config(config.detector);
            validate_weighting(config.weighting);
            return cmd_estimate(estimate_trace, config, estimate_json && !estimate_text);
        }
        if (synth->parsed()) {
            if (profile_path.empty() && !default_sweep) {
                std::cerr << "synth: need a profile JSON or --default-sweep\n";
                return kExitUsageError;
            }
            std::optional<std::uint64_t> seed;
            if (seed_opt->count()) seed = seed_value;
            return cmd_synth(profile_path, out_dir, default_sweep, seed);
        }
        if (compare->parsed()) {
            if (compare->count("--threshold")) config.detector.step_threshold = cmp_threshold;
            if (compare->count("--base-length"))
                config.weighting.base_step_length_m = cmp_base_length;
            if (compare->count("--fixed-length")) config.fixed_step_length_m = cmp_fixed_length;
            validate_detector_config(config.detector);
            validate_weighting(config.weighting);
            return cmd_compare(manifest_path, config, report_path);
        }
    } catch (const InvalidConfig& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const InvalidProfile& e) {
        std::cerr << "profile error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDataError;
    }
    return kExitUsageError;
}
