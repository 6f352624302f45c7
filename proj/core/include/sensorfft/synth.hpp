#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sensorfft/ingest.hpp"

namespace sensorfft {

/// A bump added on top of the diurnal curve while a room is occupied.
struct OccupancyPulse {
    double start_hour = 0.0;
    double duration_hours = 1.0;
    double magnitude = 0.0;  ///< peak rise, ppm
};

/// Synthetic indoor CO2 day. Stand-in model, not a calibrated one:
///
///   x(t) = baseline + diurnal_amplitude * sin(2*pi*t/24h - pi/2)
///        + sum over pulses of magnitude * sin(pi * (t - start) / duration), start <= t <= start + duration
///        + N(0, noise_std)
///
/// Each pulse is a half cosine period: zero at both ends with a slope jump at
/// onset and release, which is what the activation detector should catch.
struct SynthConfig {
    double duration_hours = 24.0;
    double interval_minutes = 15.0;
    double baseline = 420.0;
    double diurnal_amplitude = 80.0;
    std::vector<OccupancyPulse> pulses{{9.0, 3.0, 350.0}, {14.0, 2.5, 300.0}};
    double noise_std = 5.0;
    std::uint64_t seed = 1;
    EpochSeconds start = 0;
    std::string channel = "co2_ppm";
};

/// Sample count floor(duration * 60 / interval) + 1.
std::size_t sample_count(const SynthConfig& config);

/// Throws ParameterError on a non-positive duration or interval, an interval
/// that is not a whole number of seconds, negative noise, a non-positive pulse
/// duration or fewer than 2 samples.
void validate(const SynthConfig& config);

/// Noise-free model value at `hours` after start.
double model_value(const SynthConfig& config, double hours);

/// Deterministic Gaussian noise source.
///
/// Uniforms come from std::mt19937_64 seeded with `seed` (the standard fixes
/// its output sequence): u = ((word >> 11) + 0.5) * 2^-53, so u is in (0, 1).
/// Normals come from Box-Muller on consecutive uniform pairs (u1, u2):
/// sqrt(-2 ln u1) * cos(2 pi u2) first, then sqrt(-2 ln u1) * sin(2 pi u2).
class GaussianNoise {
public:
    explicit GaussianNoise(std::uint64_t seed);

    double next();

private:
    double uniform();

    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

/// Generates the series. Same config (including seed) gives bit-identical output.
UniformSeries generate(const SynthConfig& config);

}  // namespace sensorfft
