#include "stridekit/json_io.hpp"

#include <cmath>
#include <fstream>

namespace stridekit {

double round6(double v) {
    return std::llround(v * 1e6) / 1e6;
}

json to_json(const FilterParams& p) {
    json j;
    j["kalman_process_var"] = p.kalman_process_var;
    j["kalman_measurement_var"] = p.kalman_measurement_var;
    j["highpass_cutoff_hz"] = p.highpass_cutoff_hz;
    j["outlier_clamp_sigma"] = p.outlier_clamp_sigma ? json(*p.outlier_clamp_sigma) : json(nullptr);
    return j;
}

FilterParams filter_params_from_json(const json& j) {
    FilterParams p;
    p.kalman_process_var = j.value("kalman_process_var", p.kalman_process_var);
    p.kalman_measurement_var = j.value("kalman_measurement_var", p.kalman_measurement_var);
    p.highpass_cutoff_hz = j.value("highpass_cutoff_hz", p.highpass_cutoff_hz);
    if (j.contains("outlier_clamp_sigma") && !j["outlier_clamp_sigma"].is_null())
        p.outlier_clamp_sigma = j["outlier_clamp_sigma"].get<double>();
    return p;
}

json to_json(const DetectorConfig& c) {
    json j;
    j["step_threshold"] = c.step_threshold;
    j["rise_count"] = c.rise_count;
    j["fall_count"] = c.fall_count;
    j["min_step_interval_s"] = c.min_step_interval_s;
    j["max_step_duration_s"] = c.max_step_duration_s;
    return j;
}

DetectorConfig detector_config_from_json(const json& j) {
    DetectorConfig c;
    c.step_threshold = j.value("step_threshold", c.step_threshold);
    c.rise_count = j.value("rise_count", c.rise_count);
    c.fall_count = j.value("fall_count", c.fall_count);
    c.min_step_interval_s = j.value("min_step_interval_s", c.min_step_interval_s);
    c.max_step_duration_s = j.value("max_step_duration_s", c.max_step_duration_s);
    return c;
}

json to_json(const StepWeighting& w) {
    json j;
    j["short_weight"] = w.short_weight;
    j["medium_weight"] = w.medium_weight;
    j["long_weight"] = w.long_weight;
    j["medium_band_fraction"] = w.medium_band_fraction;
    j["base_step_length_m"] = w.base_step_length_m;
    return j;
}

StepWeighting weighting_from_json(const json& j) {
    StepWeighting w;
    w.short_weight = j.value("short_weight", w.short_weight);
    w.medium_weight = j.value("medium_weight", w.medium_weight);
    w.long_weight = j.value("long_weight", w.long_weight);
    w.medium_band_fraction = j.value("medium_band_fraction", w.medium_band_fraction);
    w.base_step_length_m = j.value("base_step_length_m", w.base_step_length_m);
    return w;
}

json to_json(const StepEvent& e) {
    json j;
    j["start_t"] = round6(e.start_t);
    j["peak_t"] = round6(e.peak_t);
    j["end_t"] = round6(e.end_t);
    j["peak_value"] = round6(e.peak_value);
    j["duration_s"] = round6(e.duration_s);
    return j;
}

json to_json(const std::vector<StepEvent>& events) {
    json j = json::array();
    for (const auto& e : events) j.push_back(to_json(e));
    return j;
}

std::vector<StepEvent> step_events_from_json(const json& j) {
    std::vector<StepEvent> events;
    for (const auto& e : j) {
        events.push_back({e.at("start_t").get<double>(), e.at("peak_t").get<double>(),
                          e.at("end_t").get<double>(), e.at("peak_value").get<double>(),
                          e.at("duration_s").get<double>()});
    }
    return events;
}

json to_json(const DistanceEstimate& d) {
    json j;
    j["distance_m"] = round6(d.distance_m);
    j["step_count"] = d.step_count;
    json per = json::array();
    for (const auto& s : d.per_step) {
        json e = to_json(s.event);
        e["category"] = to_string(s.category);
        e["alpha"] = s.alpha;
        per.push_back(e);
    }
    j["per_step"] = per;
    return j;
}

json to_json(const GaitProfile& p) {
    json j;
    j["step_count"] = p.step_count;
    j["cadence_hz"] = p.cadence_hz;
    j["stride_length_mean_m"] = p.stride_length_mean_m;
    j["stride_length_cv"] = p.stride_length_cv;
    j["peak_amplitude_m_s2"] = p.peak_amplitude_m_s2;
    j["fake_peak_count"] = p.fake_peak_count;
    j["fake_peak_amplitude_fraction"] = p.fake_peak_amplitude_fraction;
    j["noise_sigma_m_s2"] = p.noise_sigma_m_s2;
    j["sample_rate_hz"] = p.sample_rate_hz;
    j["seed"] = p.seed;
    return j;
}

GaitProfile profile_from_json(const json& j) {
    GaitProfile p;
    p.step_count = j.value("step_count", p.step_count);
    p.cadence_hz = j.value("cadence_hz", p.cadence_hz);
    p.stride_length_mean_m = j.value("stride_length_mean_m", p.stride_length_mean_m);
    p.stride_length_cv = j.value("stride_length_cv", p.stride_length_cv);
    p.peak_amplitude_m_s2 = j.value("peak_amplitude_m_s2", p.peak_amplitude_m_s2);
    p.fake_peak_count = j.value("fake_peak_count", p.fake_peak_count);
    p.fake_peak_amplitude_fraction =
        j.value("fake_peak_amplitude_fraction", p.fake_peak_amplitude_fraction);
    p.noise_sigma_m_s2 = j.value("noise_sigma_m_s2", p.noise_sigma_m_s2);
    p.sample_rate_hz = j.value("sample_rate_hz", p.sample_rate_hz);
    p.seed = j.value("seed", p.seed);
    return p;
}

json to_json(const GroundTruth& t) {
    json j;
    json steps = json::array();
    for (const auto& s : t.true_steps) {
        json e;
        e["start_t"] = round6(s.start_t);
        e["peak_t"] = round6(s.peak_t);
        e["end_t"] = round6(s.end_t);
        e["stride_length_m"] = round6(s.stride_length_m);
        steps.push_back(e);
    }
    j["true_steps"] = steps;
    j["true_distance_m"] = round6(t.true_distance_m);
    json fakes = json::array();
    for (double ft : t.fake_peak_times) fakes.push_back(round6(ft));
    j["fake_peak_times"] = fakes;
    return j;
}

GroundTruth ground_truth_from_json(const json& j) {
    GroundTruth t;
    for (const auto& e : j.at("true_steps")) {
        t.true_steps.push_back({e.at("start_t").get<double>(), e.at("peak_t").get<double>(),
                                e.at("end_t").get<double>(), e.at("stride_length_m").get<double>()});
    }
    t.true_distance_m = j.at("true_distance_m").get<double>();
    for (const auto& f : j.at("fake_peak_times")) t.fake_peak_times.push_back(f.get<double>());
    return t;
}

json to_json(const CorpusManifest& m) {
    json j;
    j["rng_algorithm"] = m.rng_algorithm;
    json entries = json::array();
    for (const auto& e : m.entries) {
        json je;
        je["trace_path"] = e.trace_path;
        je["truth_path"] = e.truth_path;
        je["seed"] = e.seed;
        je["profile"] = to_json(e.profile);
        entries.push_back(je);
    }
    j["entries"] = entries;
    return j;
}

CorpusManifest manifest_from_json(const json& j) {
    CorpusManifest m;
    m.rng_algorithm = j.value("rng_algorithm", "");
    for (const auto& je : j.at("entries")) {
        CorpusEntry e;
        e.trace_path = je.at("trace_path").get<std::string>();
        e.truth_path = je.at("truth_path").get<std::string>();
        e.seed = je.at("seed").get<std::uint64_t>();
        e.profile = profile_from_json(je.at("profile"));
        m.entries.push_back(std::move(e));
    }
    return m;
}

json to_json(const DetectionScore& s) {
    json j;
    j["true_positives"] = s.true_positives;
    j["false_positives"] = s.false_positives;
    j["false_negatives"] = s.false_negatives;
    j["precision"] = round6(s.precision);
    j["recall"] = round6(s.recall);
    return j;
}

json to_json(const ErrorReport& r) {
    json j;
    j["proposed_mae_m"] = round6(r.proposed_mae_m);
    j["baseline_mae_m"] = round6(r.baseline_mae_m);
    j["proposed_slope"] = round6(r.proposed_slope);
    j["baseline_slope"] = round6(r.baseline_slope);
    return j;
}

json to_json(const std::vector<TableRow>& rows) {
    json j = json::array();
    for (const auto& r : rows) {
        json e;
        e["trace_id"] = r.trace_id;
        e["true_distance_m"] = round6(r.true_distance_m);
        e["true_steps"] = r.true_steps;
        e["est_steps"] = r.est_steps;
        e["est_distance_m"] = round6(r.est_distance_m);
        e["baseline_distance_m"] = round6(r.baseline_distance_m);
        e["abs_error_m"] = round6(r.abs_error_m);
        j.push_back(e);
    }
    return j;
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

void save_json_file(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace stridekit
