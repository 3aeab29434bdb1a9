#pragma once

#include <cstdlib>
#include <filesystem>
#include <string>

#include "stridekit/types.hpp"

namespace stridekit::testing {

// Wraps plain values into a series for detector-level tests.
inline MagnitudeSeries make_series(std::vector<double> values, double rate_hz = 50.0,
                                   double t0 = 0.0) {
    MagnitudeSeries s;
    s.values = std::move(values);
    s.t0 = t0;
    s.sample_rate_hz = rate_hz;
    s.kind = SeriesKind::filtered;
    return s;
}

// Unique scratch directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0; i < 10000; ++i) {
            auto candidate = base / (tag + "_" + std::to_string(std::rand()) + std::to_string(i));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("cannot create temp dir");
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace stridekit::testing
