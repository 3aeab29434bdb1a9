#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "stridekit/baseline.hpp"
#include "stridekit/detector.hpp"
#include "stridekit/distance.hpp"
#include "stridekit/eval.hpp"
#include "stridekit/filters.hpp"
#include "stridekit/json_io.hpp"
#include "stridekit/synth.hpp"
#include "stridekit/trace_io.hpp"

namespace py = pybind11;
using namespace stridekit;

PYBIND11_MODULE(_core, m) {
    m.doc() = "step detection and travelled-distance estimation over accelerometer traces";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NonMonotonicTime>(m, "NonMonotonicTime", PyExc_ValueError);
    py::register_exception<NonUniformSampling>(m, "NonUniformSampling", PyExc_ValueError);
    py::register_exception<TooShort>(m, "TooShort", PyExc_ValueError);
    py::register_exception<EmptySeries>(m, "EmptySeries", PyExc_ValueError);
    py::register_exception<InvalidConfig>(m, "InvalidConfig", PyExc_ValueError);
    py::register_exception<InvalidProfile>(m, "InvalidProfile", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<EmptySteps>(m, "EmptySteps", PyExc_ValueError);
    py::register_exception<NonPositiveAverage>(m, "NonPositiveAverage", PyExc_ValueError);
    py::register_exception<DegenerateInput>(m, "DegenerateInput", PyExc_ValueError);

    py::class_<AccelSample>(m, "AccelSample")
        .def(py::init<>())
        .def(py::init([](double t, double x, double y, double z) {
                 return AccelSample{t, x, y, z};
             }),
             py::arg("t"), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("t", &AccelSample::t)
        .def_readwrite("x", &AccelSample::x)
        .def_readwrite("y", &AccelSample::y)
        .def_readwrite("z", &AccelSample::z)
        .def("__repr__", [](const AccelSample& s) {
            return "AccelSample(t=" + std::to_string(s.t) + ", x=" + std::to_string(s.x) +
                   ", y=" + std::to_string(s.y) + ", z=" + std::to_string(s.z) + ")";
        });

    py::class_<Trace>(m, "Trace")
        .def(py::init<>())
        .def_readwrite("samples", &Trace::samples)
        .def_readwrite("sample_rate_hz", &Trace::sample_rate_hz)
        .def_readwrite("meta", &Trace::meta)
        .def("__len__", &Trace::size)
        .def("duration_s", &Trace::duration_s);

    py::enum_<SeriesKind>(m, "SeriesKind")
        .value("raw_magnitude", SeriesKind::raw_magnitude)
        .value("net_magnitude", SeriesKind::net_magnitude)
        .value("filtered", SeriesKind::filtered);

    py::class_<MagnitudeSeries>(m, "MagnitudeSeries")
        .def(py::init<>())
        .def_readwrite("values", &MagnitudeSeries::values)
        .def_readwrite("t0", &MagnitudeSeries::t0)
        .def_readwrite("sample_rate_hz", &MagnitudeSeries::sample_rate_hz)
        .def_readwrite("kind", &MagnitudeSeries::kind)
        .def_readwrite("avg_magnitude", &MagnitudeSeries::avg_magnitude)
        .def("__len__", &MagnitudeSeries::size)
        .def("time_at", &MagnitudeSeries::time_at);

    py::class_<TraceViolation>(m, "TraceViolation")
        .def_readonly("invariant", &TraceViolation::invariant)
        .def_readonly("index", &TraceViolation::index)
        .def("__repr__", [](const TraceViolation& v) {
            return "TraceViolation(" + v.invariant + " at " + std::to_string(v.index) + ")";
        });

    py::class_<FilterParams>(m, "FilterParams")
        .def(py::init<>())
        .def_readwrite("kalman_process_var", &FilterParams::kalman_process_var)
        .def_readwrite("kalman_measurement_var", &FilterParams::kalman_measurement_var)
        .def_readwrite("highpass_cutoff_hz", &FilterParams::highpass_cutoff_hz)
        .def_readwrite("outlier_clamp_sigma", &FilterParams::outlier_clamp_sigma);

    py::class_<DetectorConfig>(m, "DetectorConfig")
        .def(py::init<>())
        .def_readwrite("step_threshold", &DetectorConfig::step_threshold)
        .def_readwrite("rise_count", &DetectorConfig::rise_count)
        .def_readwrite("fall_count", &DetectorConfig::fall_count)
        .def_readwrite("min_step_interval_s", &DetectorConfig::min_step_interval_s)
        .def_readwrite("max_step_duration_s", &DetectorConfig::max_step_duration_s);

    py::class_<StepEvent>(m, "StepEvent")
        .def(py::init<>())
        .def_readwrite("start_t", &StepEvent::start_t)
        .def_readwrite("peak_t", &StepEvent::peak_t)
        .def_readwrite("end_t", &StepEvent::end_t)
        .def_readwrite("peak_value", &StepEvent::peak_value)
        .def_readwrite("duration_s", &StepEvent::duration_s)
        .def(py::self == py::self)
        .def("__repr__", [](const StepEvent& e) {
            return "StepEvent(peak_t=" + std::to_string(e.peak_t) +
                   ", peak_value=" + std::to_string(e.peak_value) + ")";
        });

    py::class_<StreamingStepDetector>(m, "StreamingStepDetector")
        .def(py::init<const DetectorConfig&>(), py::arg("config") = DetectorConfig{})
        .def("push", &StreamingStepDetector::push, py::arg("t"), py::arg("value"))
        .def("finish", &StreamingStepDetector::finish)
        .def("reset", &StreamingStepDetector::reset);

    py::enum_<StepCategory>(m, "StepCategory")
        .value("short_step", StepCategory::short_step)
        .value("medium_step", StepCategory::medium_step)
        .value("long_step", StepCategory::long_step);

    py::class_<StepWeighting>(m, "StepWeighting")
        .def(py::init<>())
        .def_readwrite("short_weight", &StepWeighting::short_weight)
        .def_readwrite("medium_weight", &StepWeighting::medium_weight)
        .def_readwrite("long_weight", &StepWeighting::long_weight)
        .def_readwrite("medium_band_fraction", &StepWeighting::medium_band_fraction)
        .def_readwrite("base_step_length_m", &StepWeighting::base_step_length_m);

    py::class_<PerStep>(m, "PerStep")
        .def_readonly("event", &PerStep::event)
        .def_readonly("category", &PerStep::category)
        .def_readonly("alpha", &PerStep::alpha);

    py::class_<DistanceEstimate>(m, "DistanceEstimate")
        .def_readonly("distance_m", &DistanceEstimate::distance_m)
        .def_readonly("step_count", &DistanceEstimate::step_count)
        .def_readonly("per_step", &DistanceEstimate::per_step);

    py::class_<GaitProfile>(m, "GaitProfile")
        .def(py::init<>())
        .def_readwrite("step_count", &GaitProfile::step_count)
        .def_readwrite("cadence_hz", &GaitProfile::cadence_hz)
        .def_readwrite("stride_length_mean_m", &GaitProfile::stride_length_mean_m)
        .def_readwrite("stride_length_cv", &GaitProfile::stride_length_cv)
        .def_readwrite("peak_amplitude_m_s2", &GaitProfile::peak_amplitude_m_s2)
        .def_readwrite("fake_peak_count", &GaitProfile::fake_peak_count)
        .def_readwrite("fake_peak_amplitude_fraction", &GaitProfile::fake_peak_amplitude_fraction)
        .def_readwrite("noise_sigma_m_s2", &GaitProfile::noise_sigma_m_s2)
        .def_readwrite("sample_rate_hz", &GaitProfile::sample_rate_hz)
        .def_readwrite("seed", &GaitProfile::seed);

    py::class_<TrueStep>(m, "TrueStep")
        .def_readonly("start_t", &TrueStep::start_t)
        .def_readonly("peak_t", &TrueStep::peak_t)
        .def_readonly("end_t", &TrueStep::end_t)
        .def_readonly("stride_length_m", &TrueStep::stride_length_m);

    py::class_<GroundTruth>(m, "GroundTruth")
        .def_readonly("true_steps", &GroundTruth::true_steps)
        .def_readonly("true_distance_m", &GroundTruth::true_distance_m)
        .def_readonly("fake_peak_times", &GroundTruth::fake_peak_times);

    py::class_<CorpusEntry>(m, "CorpusEntry")
        .def_readonly("trace_path", &CorpusEntry::trace_path)
        .def_readonly("truth_path", &CorpusEntry::truth_path)
        .def_readonly("seed", &CorpusEntry::seed)
        .def_readonly("profile", &CorpusEntry::profile);

    py::class_<CorpusManifest>(m, "CorpusManifest")
        .def_readonly("rng_algorithm", &CorpusManifest::rng_algorithm)
        .def_readonly("entries", &CorpusManifest::entries);

    py::class_<DetectionScore>(m, "DetectionScore")
        .def_readonly("true_positives", &DetectionScore::true_positives)
        .def_readonly("false_positives", &DetectionScore::false_positives)
        .def_readonly("false_negatives", &DetectionScore::false_negatives)
        .def_readonly("precision", &DetectionScore::precision)
        .def_readonly("recall", &DetectionScore::recall);

    py::class_<DistanceTriple>(m, "DistanceTriple")
        .def(py::init([](double t, double p, double b) {
                 return DistanceTriple{t, p, b};
             }),
             py::arg("true_distance_m"), py::arg("proposed_m"), py::arg("baseline_m"))
        .def_readwrite("true_distance_m", &DistanceTriple::true_distance_m)
        .def_readwrite("proposed_m", &DistanceTriple::proposed_m)
        .def_readwrite("baseline_m", &DistanceTriple::baseline_m);

    py::class_<ErrorReport>(m, "ErrorReport")
        .def_readonly("proposed_mae_m", &ErrorReport::proposed_mae_m)
        .def_readonly("baseline_mae_m", &ErrorReport::baseline_mae_m)
        .def_readonly("proposed_slope", &ErrorReport::proposed_slope)
        .def_readonly("baseline_slope", &ErrorReport::baseline_slope);

    m.def("load_trace", &load_trace, py::arg("path"));
    m.def("save_trace", &save_trace, py::arg("trace"), py::arg("path"));
    m.def("validate_trace", &validate_trace, py::arg("trace"));

    m.def("magnitude", py::overload_cast<double, double, double>(&magnitude), py::arg("x"),
          py::arg("y"), py::arg("z"));
    m.def("magnitude_series", &magnitude_series, py::arg("trace"));
    m.def("net_magnitude", &net_magnitude, py::arg("series"));
    m.def("kalman_smooth", &kalman_smooth, py::arg("series"),
          py::arg("params") = FilterParams{});
    m.def("highpass", &highpass, py::arg("series"), py::arg("params") = FilterParams{});
    m.def("preprocess_pipeline", &preprocess_pipeline, py::arg("trace"),
          py::arg("params") = FilterParams{});

    m.def("detect_steps", &detect_steps, py::arg("series"),
          py::arg("config") = DetectorConfig{});
    m.def("detect_steps_streaming", &detect_steps_streaming, py::arg("series"),
          py::arg("config") = DetectorConfig{});

    m.def("mean_step_size", &mean_step_size, py::arg("steps"));
    m.def("categorize", &categorize, py::arg("step"), py::arg("avg"),
          py::arg("weighting") = StepWeighting{});
    m.def("estimate_distance", &estimate_distance, py::arg("steps"),
          py::arg("weighting") = StepWeighting{});

    m.def("conventional_count", &conventional_count, py::arg("series"), py::arg("threshold"),
          py::arg("min_interval_s"));
    m.def("conventional_distance", &conventional_distance, py::arg("count"),
          py::arg("fixed_step_length_m"));

    m.def("generate_trace", &generate_trace, py::arg("profile"));
    m.def("generate_corpus", &generate_corpus, py::arg("profiles"), py::arg("out_dir"));
    m.def("default_sweep_profiles", &default_sweep_profiles);

    m.def("score_detection", &score_detection, py::arg("events"), py::arg("truth"),
          py::arg("match_window_s") = kDefaultMatchWindowS);
    m.def("error_report", &error_report, py::arg("estimates"));
    m.def("table_report", &table_report, py::arg("rows"));

    m.attr("DEFAULT_FIXED_STEP_LENGTH_M") = kDefaultFixedStepLengthM;
    m.attr("CONVENTIONAL_DEBOUNCE_S") = kConventionalDebounceS;
    m.attr("DEFAULT_MATCH_WINDOW_S") = kDefaultMatchWindowS;

    py::class_<TableRow>(m, "TableRow")
        .def(py::init<>())
        .def_readwrite("trace_id", &TableRow::trace_id)
        .def_readwrite("true_distance_m", &TableRow::true_distance_m)
        .def_readwrite("true_steps", &TableRow::true_steps)
        .def_readwrite("est_steps", &TableRow::est_steps)
        .def_readwrite("est_distance_m", &TableRow::est_distance_m)
        .def_readwrite("baseline_distance_m", &TableRow::baseline_distance_m)
        .def_readwrite("abs_error_m", &TableRow::abs_error_m);
}
