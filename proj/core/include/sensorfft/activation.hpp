#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sensorfft/ingest.hpp"

namespace sensorfft {

inline constexpr double kDefaultKSigma = 2.0;

/// Moments at which the sensor should wake, as sample indices and timestamps.
/// Index 0 is always present.
struct ActivationSchedule {
    std::vector<std::size_t> indices;
    std::vector<EpochSeconds> timestamps;
    double k_sigma = kDefaultKSigma;
    std::int64_t interval = 1;
    std::string channel;

    friend bool operator==(const ActivationSchedule&, const ActivationSchedule&) = default;
};

/// Forward difference (x[i+1] - x[i]) / interval, length N - 1.
std::vector<double> derivative(const UniformSeries& series);

/// Every index where |d[i]| > mean(|d|) + k_sigma * stddev(|d|), using the
/// population stddev. Empty when the stddev is zero. Raising k_sigma can only
/// remove indices from this set.
/// Throws ParameterError for k_sigma < 0 or an empty derivative.
std::vector<std::size_t> sharp_changes(std::span<const double> deriv, double k_sigma);

/// sharp_changes() reduced to wake-up moments. Each run of consecutive hits
/// is reduced to its first index and index 0 is prepended when missing. A zero stddev yields {0}.
/// Throws ParameterError for k_sigma < 0 or an empty derivative.
std::vector<std::size_t> detect_activations(std::span<const double> deriv, double k_sigma);

/// Maps indices onto start + index * interval.
/// Throws ParameterError unless indices start at 0, strictly increase and stay below `length`.
ActivationSchedule build_schedule(std::span<const std::size_t> indices, EpochSeconds start,
                                  std::int64_t interval, std::size_t length, std::string channel,
                                  double k_sigma);

}  // namespace sensorfft
