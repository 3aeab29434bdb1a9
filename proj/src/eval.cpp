#include "stridekit/eval.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace stridekit {

DetectionScore score_detection(const std::vector<StepEvent>& events, const GroundTruth& truth,
                               double match_window_s) {
    if (!(match_window_s > 0.0)) throw InvalidConfig("match_window_s must be positive");
    std::vector<bool> matched(truth.true_steps.size(), false);
    DetectionScore score;
    for (const auto& ev : events) {
        bool hit = false;
        for (std::size_t i = 0; i < truth.true_steps.size(); ++i) {
            if (matched[i]) continue;
            if (std::abs(ev.peak_t - truth.true_steps[i].peak_t) <= match_window_s) {
                matched[i] = true;
                hit = true;
                break;
            }
        }
        if (hit)
            ++score.true_positives;
        else
            ++score.false_positives;
    }
    score.false_negatives = truth.true_steps.size() - score.true_positives;
    score.precision = events.empty()
                          ? 1.0
                          : static_cast<double>(score.true_positives) / static_cast<double>(events.size());
    score.recall = truth.true_steps.empty()
                       ? 1.0
                       : static_cast<double>(score.true_positives) /
                             static_cast<double>(truth.true_steps.size());
    return score;
}

ErrorReport error_report(const std::vector<DistanceTriple>& estimates) {
    if (estimates.size() < 2) throw DegenerateInput("error_report: need at least 2 entries");
    double tmin = estimates.front().true_distance_m;
    double tmax = tmin;
    for (const auto& e : estimates) {
        tmin = std::min(tmin, e.true_distance_m);
        tmax = std::max(tmax, e.true_distance_m);
    }
    if (tmin == tmax) throw DegenerateInput("error_report: all true distances equal");

    const auto n = static_cast<double>(estimates.size());
    double t_mean = 0.0, pe_mean = 0.0, be_mean = 0.0;
    for (const auto& e : estimates) {
        t_mean += e.true_distance_m;
        pe_mean += std::abs(e.proposed_m - e.true_distance_m);
        be_mean += std::abs(e.baseline_m - e.true_distance_m);
    }
    t_mean /= n;
    pe_mean /= n;
    be_mean /= n;

    double stt = 0.0, stp = 0.0, stb = 0.0;
    for (const auto& e : estimates) {
        double td = e.true_distance_m - t_mean;
        stt += td * td;
        stp += td * (std::abs(e.proposed_m - e.true_distance_m) - pe_mean);
        stb += td * (std::abs(e.baseline_m - e.true_distance_m) - be_mean);
    }
    ErrorReport report;
    report.proposed_mae_m = pe_mean;
    report.baseline_mae_m = be_mean;
    report.proposed_slope = stp / stt;
    report.baseline_slope = stb / stt;
    return report;
}

std::string table_report(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-12s %14s %10s %9s %14s %18s %12s\n", "trace_id",
                  "true_dist_m", "true_steps", "est_steps", "est_dist_m", "baseline_dist_m",
                  "abs_error_m");
    out << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%-12s %14.6f %10zu %9zu %14.6f %18.6f %12.6f\n",
                      r.trace_id.c_str(), r.true_distance_m, r.true_steps, r.est_steps,
                      r.est_distance_m, r.baseline_distance_m, r.abs_error_m);
        out << line;
    }
    return out.str();
}

std::string plot_csv(const std::vector<DistanceTriple>& estimates) {
    std::ostringstream out;
    out << "true_distance,proposed_error,baseline_error\n";
    char line[128];
    for (const auto& e : estimates) {
        std::snprintf(line, sizeof line, "%.6f,%.6f,%.6f\n", e.true_distance_m,
                      std::abs(e.proposed_m - e.true_distance_m),
                      std::abs(e.baseline_m - e.true_distance_m));
        out << line;
    }
    return out.str();
}

}  // namespace stridekit
