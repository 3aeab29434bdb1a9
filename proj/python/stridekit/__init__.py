"""Step detection and travelled-distance estimation over accelerometer traces.

Thin Python surface over the C++ core: trace IO, the preprocessing pipeline,
the step detector (batch and streaming), dynamic step-length distance
estimation, the fixed-length baseline, the synthetic gait generator and the
evaluation helpers.
"""

from ._core import (  # noqa: F401
    AccelSample,
    CorpusEntry,
    CorpusManifest,
    DetectionScore,
    DetectorConfig,
    DistanceEstimate,
    DistanceTriple,
    ErrorReport,
    FilterParams,
    GaitProfile,
    GroundTruth,
    MagnitudeSeries,
    PerStep,
    SeriesKind,
    StepCategory,
    StepEvent,
    StepWeighting,
    StreamingStepDetector,
    TableRow,
    Trace,
    TraceViolation,
    TrueStep,
    CONVENTIONAL_DEBOUNCE_S,
    DEFAULT_FIXED_STEP_LENGTH_M,
    DEFAULT_MATCH_WINDOW_S,
    categorize,
    conventional_count,
    conventional_distance,
    default_sweep_profiles,
    detect_steps,
    detect_steps_streaming,
    error_report,
    estimate_distance,
    generate_corpus,
    generate_trace,
    highpass,
    kalman_smooth,
    load_trace,
    magnitude,
    magnitude_series,
    mean_step_size,
    net_magnitude,
    preprocess_pipeline,
    save_trace,
    score_detection,
    table_report,
    validate_trace,
)

__version__ = "0.1.0"
