#include <doctest.h>

#include <cmath>

#include "stridekit/filters.hpp"
#include "stridekit/rng.hpp"
#include "stridekit/synth.hpp"
#include "support/helpers.hpp"

using namespace stridekit;
using stridekit::testing::make_series;

namespace {

Trace constant_trace(double x, double y, double z, std::size_t n = 200, double rate = 50.0) {
    Trace trace;
    trace.sample_rate_hz = rate;
    for (std::size_t i = 0; i < n; ++i)
        trace.samples.push_back({static_cast<double>(i) / rate, x, y, z});
    return trace;
}

double variance(const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    return var / static_cast<double>(v.size() - 1);
}

}  // namespace

TEST_CASE("magnitude handles the forced cases") {
    CHECK(magnitude(0.0, 0.0, 0.0) == 0.0);
    CHECK(magnitude(3.0, 4.0, 0.0) == 5.0);
    CHECK(magnitude(0.0, 0.0, 9.81) == 9.81);
}

TEST_CASE("magnitude is rotation invariant") {
    Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        double x = rng.normal() * 5, y = rng.normal() * 5, z = rng.normal() * 5;
        double angle = rng.uniform01() * 6.28318530717958647;
        // rotate about z
        double rx = x * std::cos(angle) - y * std::sin(angle);
        double ry = x * std::sin(angle) + y * std::cos(angle);
        CHECK(magnitude(rx, ry, z) == doctest::Approx(magnitude(x, y, z)).epsilon(1e-9));
    }
}

TEST_CASE("net_magnitude subtracts the mean and records it") {
    auto s = make_series({9.81, 9.81, 9.81});
    s.kind = SeriesKind::raw_magnitude;
    auto net = net_magnitude(s);
    CHECK(net.values == std::vector<double>{0.0, 0.0, 0.0});
    CHECK(net.avg_magnitude == doctest::Approx(9.81));
    CHECK(net.kind == SeriesKind::net_magnitude);

    auto s2 = make_series({8.0, 10.0, 12.0});
    auto net2 = net_magnitude(s2);
    CHECK(net2.values == std::vector<double>{-2.0, 0.0, 2.0});
    CHECK(*net2.avg_magnitude == doctest::Approx(10.0));

    CHECK_THROWS_AS(net_magnitude(make_series({})), EmptySeries);
}

TEST_CASE("net_magnitude output mean is zero within 1e-9 on random series") {
    Rng rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(rng.below(3000));
        std::vector<double> vals(n);
        for (double& v : vals) v = 9.81 + rng.normal() * 3.0;
        auto net = net_magnitude(make_series(std::move(vals)));
        double mean = 0.0;
        for (double v : net.values) mean += v;
        mean /= static_cast<double>(net.size());
        CHECK(std::abs(mean) < 1e-9);
    }
}

TEST_CASE("kalman_smooth converges to a constant input") {
    FilterParams params;
    std::vector<double> vals(100, 3.5);
    auto out = kalman_smooth(make_series(std::move(vals)), params);
    CHECK(std::abs(out.values.back() - 3.5) < 1e-6);
    for (double v : out.values) CHECK(std::isfinite(v));
}

TEST_CASE("kalman_smooth reduces white-noise variance") {
    FilterParams params;  // q=1e-3, r=1e-1
    Rng rng(77);
    std::vector<double> noise(1000);
    for (double& v : noise) v = 0.5 * rng.normal();
    auto in = make_series(std::move(noise));
    auto out = kalman_smooth(in, params);
    CHECK(variance(out.values) < variance(in.values));
}

TEST_CASE("kalman_smooth rises monotonically after a unit step") {
    FilterParams params;
    std::vector<double> vals(50, 0.0);
    vals.resize(150, 1.0);
    auto out = kalman_smooth(make_series(std::move(vals)), params);
    for (std::size_t i = 51; i < out.size(); ++i) CHECK(out.values[i] >= out.values[i - 1]);
    CHECK(out.values.back() > 0.9);
}

TEST_CASE("highpass rejects DC exactly") {
    FilterParams params;
    auto out = highpass(make_series(std::vector<double>(64, 2.5)), params);
    for (double v : out.values) CHECK(v == 0.0);
}

TEST_CASE("highpass passes a 2 Hz tone nearly unattenuated") {
    FilterParams params;  // cutoff 0.3 Hz
    double rate = 50.0;
    std::size_t n = static_cast<std::size_t>(10.0 * rate);
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i)
        vals[i] = std::sin(2.0 * M_PI * 2.0 * static_cast<double>(i) / rate);
    auto out = highpass(make_series(std::move(vals), rate), params);
    double peak = 0.0;
    for (std::size_t i = static_cast<std::size_t>(2.0 * rate); i < n; ++i)
        peak = std::max(peak, std::abs(out.values[i]));
    CHECK(peak >= 0.95);
}

TEST_CASE("outlier clamp shrinks an isolated spike") {
    double rate = 50.0;
    std::size_t n = 500;
    Rng rng(5);
    std::vector<double> vals(n);
    for (double& v : vals) v = 0.3 * rng.normal();
    vals[400] += 50.0;

    FilterParams plain;
    FilterParams clamped;
    clamped.outlier_clamp_sigma = 3.0;
    auto base = highpass(make_series(vals, rate), plain);
    auto clip = highpass(make_series(vals, rate), clamped);
    CHECK(std::abs(clip.values[400]) < std::abs(base.values[400]));
}

TEST_CASE("pipeline cancels gravity on a stationary trace") {
    FilterParams params;
    auto out = preprocess_pipeline(constant_trace(0.0, 0.0, 9.81), params);
    REQUIRE(out.size() == 200);
    for (std::size_t i = 50; i < out.size(); ++i) CHECK(std::abs(out.values[i]) <= 1e-6);
    CHECK(out.kind == SeriesKind::filtered);
}

TEST_CASE("pipeline output length equals trace length and is deterministic") {
    GaitProfile profile;
    profile.step_count = 6;
    profile.noise_sigma_m_s2 = 0.1;
    profile.seed = 31;
    auto [trace, truth] = generate_trace(profile);
    FilterParams params;
    auto a = preprocess_pipeline(trace, params);
    auto b = preprocess_pipeline(trace, params);
    CHECK(a.size() == trace.samples.size());
    CHECK(a.values == b.values);
}

TEST_CASE("pipeline on a single-step trace yields one dominant local maximum") {
    GaitProfile profile;
    profile.step_count = 1;
    profile.cadence_hz = 1.2;
    profile.sample_rate_hz = 100.0;
    profile.peak_amplitude_m_s2 = 6.0;
    profile.seed = 5;
    auto [trace, truth] = generate_trace(profile);
    auto out = preprocess_pipeline(trace, FilterParams{});
    int maxima_above_half = 0;
    for (std::size_t i = 1; i + 1 < out.size(); ++i) {
        if (out.values[i] > out.values[i - 1] && out.values[i] >= out.values[i + 1] &&
            out.values[i] > 0.5 * profile.peak_amplitude_m_s2)
            ++maxima_above_half;
    }
    CHECK(maxima_above_half == 1);
}

TEST_CASE("filter params are validated") {
    FilterParams params;
    params.highpass_cutoff_hz = 30.0;  // >= rate/2
    CHECK_THROWS_AS(validate_filter_params(params, 50.0), InvalidConfig);
    params = FilterParams{};
    params.kalman_process_var = 0.0;
    CHECK_THROWS_AS(validate_filter_params(params, 50.0), InvalidConfig);
    params = FilterParams{};
    params.outlier_clamp_sigma = -1.0;
    CHECK_THROWS_AS(validate_filter_params(params, 50.0), InvalidConfig);
}

TEST_CASE("streaming net magnitude tracks a level shift") {
    StreamingNetMagnitude ema(0.01);
    double out = 0.0;
    for (int i = 0; i < 2000; ++i) out = ema.push(9.81);
    CHECK(std::abs(out) < 1e-6);
    CHECK(ema.average() == doctest::Approx(9.81).epsilon(1e-6));
}
