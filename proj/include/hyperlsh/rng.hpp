#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hyperlsh {

// Deterministic random source. All randomized operations take one of these
// explicitly so that a (seed, call sequence) pair fully determines the output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1), 53-bit resolution
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform in (0, 1], for logs
    double uniform_pos() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    // standard normal via Box-Muller; no cached second value, so the
    // draw count per call is fixed (two uniforms each)
    double normal() {
        double u = uniform_pos();
        double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
    }

    // independent child stream, used to give sub-experiments their own seeds
    Rng child() { return Rng(next_u64() ^ 0x9e3779b97f4a7c15ULL); }

private:
    std::mt19937_64 engine_;
};

}  // namespace hyperlsh
