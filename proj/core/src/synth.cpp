#include "sensorfft/synth.hpp"

#include <cmath>
#include <numbers>

#include "sensorfft/error.hpp"

namespace sensorfft {

namespace {

std::int64_t interval_seconds(const SynthConfig& config) {
    return static_cast<std::int64_t>(std::llround(config.interval_minutes * 60.0));
}

}  // namespace

GaussianNoise::GaussianNoise(std::uint64_t seed) : engine_(seed) {}

double GaussianNoise::uniform() {
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    return (static_cast<double>(engine_() >> 11) + 0.5) * kScale;
}

double GaussianNoise::next() {
    if (spare_) {
        const double z = *spare_;
        spare_.reset();
        return z;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    return r * std::cos(phi);
}

std::size_t sample_count(const SynthConfig& config) {
    return static_cast<std::size_t>(std::floor(config.duration_hours * 60.0 / config.interval_minutes)) + 1;
}

void validate(const SynthConfig& config) {
    if (!(config.duration_hours > 0.0) || !std::isfinite(config.duration_hours)) {
        throw ParameterError("duration must be positive");
    }
    if (!(config.interval_minutes > 0.0) || !std::isfinite(config.interval_minutes)) {
        throw ParameterError("interval must be positive");
    }
    if (static_cast<double>(interval_seconds(config)) != config.interval_minutes * 60.0) {
        throw ParameterError("interval must be a whole number of seconds");
    }
    if (!(config.noise_std >= 0.0) || !std::isfinite(config.noise_std)) {
        throw ParameterError("noise_std must be >= 0");
    }
    if (!std::isfinite(config.baseline) || !std::isfinite(config.diurnal_amplitude)) {
        throw ParameterError("baseline and diurnal amplitude must be finite");
    }
    for (const auto& p : config.pulses) {
        if (!(p.duration_hours > 0.0) || !std::isfinite(p.start_hour) || !std::isfinite(p.magnitude)) {
            throw ParameterError("occupancy pulse needs a positive duration and finite start/magnitude");
        }
    }
    if (sample_count(config) < 2) throw ParameterError("configuration yields fewer than 2 samples");
}

double model_value(const SynthConfig& config, double hours) {
    constexpr double pi = std::numbers::pi;
    double v = config.baseline + config.diurnal_amplitude * std::sin(2.0 * pi * hours / 24.0 - pi / 2.0);
    for (const auto& p : config.pulses) {
        const double local = hours - p.start_hour;
        if (local >= 0.0 && local <= p.duration_hours) {
            v += p.magnitude * std::sin(pi * local / p.duration_hours);
        }
    }
    return v;
}

UniformSeries generate(const SynthConfig& config) {
    validate(config);
    const std::size_t n = sample_count(config);
    const std::int64_t step = interval_seconds(config);

    UniformSeries out;
    out.start = config.start;
    out.interval = step;
    out.channel = config.channel;
    out.values.reserve(n);

    GaussianNoise noise(config.seed);
    for (std::size_t i = 0; i < n; ++i) {
        const double hours = static_cast<double>(static_cast<std::int64_t>(i) * step) / 3600.0;
        double v = model_value(config, hours);
        if (config.noise_std > 0.0) v += config.noise_std * noise.next();
        out.values.push_back(v);
    }
    return out;
}

}  // namespace sensorfft
