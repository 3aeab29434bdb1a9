#pragma once

#include <filesystem>

#include <json.hpp>

#include "stridekit/detector.hpp"
#include "stridekit/distance.hpp"
#include "stridekit/eval.hpp"
#include "stridekit/filters.hpp"
#include "stridekit/synth.hpp"

namespace stridekit {

using json = nlohmann::ordered_json;

// Quantizes to 6 decimal places; JSON numbers round-trip exactly after this.
double round6(double v);

json to_json(const FilterParams& params);
FilterParams filter_params_from_json(const json& j);

json to_json(const DetectorConfig& config);
DetectorConfig detector_config_from_json(const json& j);

json to_json(const StepWeighting& weighting);
StepWeighting weighting_from_json(const json& j);

json to_json(const StepEvent& event);
json to_json(const std::vector<StepEvent>& events);
std::vector<StepEvent> step_events_from_json(const json& j);

json to_json(const DistanceEstimate& estimate);

json to_json(const GaitProfile& profile);
GaitProfile profile_from_json(const json& j);

json to_json(const GroundTruth& truth);
GroundTruth ground_truth_from_json(const json& j);

json to_json(const CorpusManifest& manifest);
CorpusManifest manifest_from_json(const json& j);

json to_json(const DetectionScore& score);
json to_json(const ErrorReport& report);
json to_json(const std::vector<TableRow>& rows);

json load_json_file(const std::filesystem::path& path);
void save_json_file(const json& j, const std::filesystem::path& path);

}  // namespace stridekit
