#include "stridekit/trace_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

namespace stridekit {

namespace {

bool parse_double(std::string_view field, double& out) {
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && std::isfinite(out);
}

// Splits a CSV row into exactly four fields; returns false on any mismatch.
bool parse_row(std::string_view line, double out[4]) {
    for (int k = 0; k < 4; ++k) {
        std::size_t comma = line.find(',');
        std::string_view field = (comma == std::string_view::npos) ? line : line.substr(0, comma);
        if (k < 3 && comma == std::string_view::npos) return false;
        if (k == 3 && comma != std::string_view::npos) return false;
        if (!parse_double(field, out[k])) return false;
        if (comma != std::string_view::npos) line.remove_prefix(comma + 1);
    }
    return true;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

Trace load_trace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open trace file: " + path.string());

    Trace trace;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (header_seen)
                throw ParseError("row " + std::to_string(line_no) + ": comment after header");
            std::size_t eq = line.find('=');
            if (eq != std::string::npos && eq > 1)
                trace.meta[line.substr(1, eq - 1)] = line.substr(eq + 1);
            continue;
        }
        if (!header_seen) {
            if (line != "t,x,y,z")
                throw ParseError("row " + std::to_string(line_no) + ": expected header t,x,y,z");
            header_seen = true;
            continue;
        }
        double v[4];
        if (!parse_row(line, v))
            throw ParseError("row " + std::to_string(line_no) + ": malformed sample row");
        trace.samples.push_back({v[0], v[1], v[2], v[3]});
    }
    if (!header_seen) throw ParseError("missing t,x,y,z header");
    if (trace.samples.size() < 2)
        throw TooShort("trace has " + std::to_string(trace.samples.size()) + " samples, need at least 2");

    const auto& s = trace.samples;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!(s[i].t > s[i - 1].t))
            throw NonMonotonicTime("time not strictly increasing at sample " + std::to_string(i));
    }
    double span = s.back().t - s.front().t;
    trace.sample_rate_hz = static_cast<double>(s.size() - 1) / span;
    double nominal_dt = span / static_cast<double>(s.size() - 1);
    for (std::size_t i = 1; i < s.size(); ++i) {
        double dt = s[i].t - s[i - 1].t;
        if (std::abs(dt - nominal_dt) > kSpacingTolerance * nominal_dt)
            throw NonUniformSampling("sample spacing deviates more than 10% at sample " +
                                     std::to_string(i));
    }
    return trace;
}

void save_trace(const Trace& trace, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    for (const auto& [key, value] : trace.meta) out << '#' << key << '=' << value << '\n';
    out << "t,x,y,z\n";
    char buf[128];
    for (const auto& s : trace.samples) {
        std::snprintf(buf, sizeof buf, "%.6f,%.4f,%.4f,%.4f\n", s.t, s.x, s.y, s.z);
        out << buf;
    }
    if (!out) throw IoError("write failed: " + path.string());
}

std::vector<TraceViolation> validate_trace(const Trace& trace) {
    std::vector<TraceViolation> report;
    const auto& s = trace.samples;
    if (s.size() < 2) {
        report.push_back({"min_length", s.size()});
        return report;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool finite = std::isfinite(s[i].t) && std::isfinite(s[i].x) && std::isfinite(s[i].y) &&
                      std::isfinite(s[i].z);
        if (!finite || s[i].t < 0.0) {
            report.push_back({"finite_values", i});
            return report;  // later checks are meaningless with non-finite data
        }
    }
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!(s[i].t > s[i - 1].t)) {
            report.push_back({"monotonic_time", i});
            return report;
        }
    }
    if (!(trace.sample_rate_hz > 0.0)) {
        report.push_back({"sample_rate", 0});
        return report;
    }
    double nominal_dt = 1.0 / trace.sample_rate_hz;
    for (std::size_t i = 1; i < s.size(); ++i) {
        double dt = s[i].t - s[i - 1].t;
        if (std::abs(dt - nominal_dt) > kSpacingTolerance * nominal_dt) {
            report.push_back({"uniform_spacing", i});
            break;  // one uniformity violation is enough to flag the trace
        }
    }
    return report;
}

}  // namespace stridekit
