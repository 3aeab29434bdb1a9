#pragma once

#include <cstdint>
#include <random>

namespace stridekit {

// Seeded generator with a pinned output stream: mt19937_64 for bits,
// 53-bit-mantissa uniforms, Box-Muller normals. std::*_distribution is
// avoided because its value stream is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Identifier recorded in corpus manifests.
    static const char* algorithm() { return "mt19937_64/box-muller-v1"; }

    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform01() * static_cast<double>(n)) % n;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace stridekit
