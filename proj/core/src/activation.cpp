#include "sensorfft/activation.hpp"

#include <cmath>

#include "sensorfft/error.hpp"

namespace sensorfft {

std::vector<double> derivative(const UniformSeries& series) {
    validate(series);
    const double dt = static_cast<double>(series.interval);
    std::vector<double> d(series.size() - 1);
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        d[i] = (series.values[i + 1] - series.values[i]) / dt;
    }
    return d;
}

std::vector<std::size_t> sharp_changes(std::span<const double> deriv, double k_sigma) {
    if (!(k_sigma >= 0.0) || !std::isfinite(k_sigma)) throw ParameterError("k_sigma must be a finite value >= 0");
    if (deriv.empty()) throw ParameterError("derivative is empty");

    const double n = static_cast<double>(deriv.size());
    double mean = 0.0;
    for (double d : deriv) mean += std::abs(d);
    mean /= n;
    double var = 0.0;
    for (double d : deriv) {
        const double e = std::abs(d) - mean;
        var += e * e;
    }
    const double sigma = std::sqrt(var / n);

    std::vector<std::size_t> hits;
    if (sigma == 0.0) return hits;
    const double limit = mean + k_sigma * sigma;
    for (std::size_t i = 0; i < deriv.size(); ++i) {
        if (std::abs(deriv[i]) > limit) hits.push_back(i);
    }
    return hits;
}

std::vector<std::size_t> detect_activations(std::span<const double> deriv, double k_sigma) {
    const auto hits = sharp_changes(deriv, k_sigma);
    std::vector<std::size_t> out{0};
    for (std::size_t j = 0; j < hits.size(); ++j) {
        const bool run_start = j == 0 || hits[j - 1] + 1 != hits[j];
        if (run_start && hits[j] != 0) out.push_back(hits[j]);
    }
    return out;
}

ActivationSchedule build_schedule(std::span<const std::size_t> indices, EpochSeconds start,
                                  std::int64_t interval, std::size_t length, std::string channel,
                                  double k_sigma) {
    if (indices.empty() || indices.front() != 0) throw ParameterError("schedule must start at index 0");
    if (interval <= 0) throw ParameterError("schedule interval must be positive");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= length) {
            throw ParameterError("activation index " + std::to_string(indices[i]) + " outside series of length " +
                                 std::to_string(length));
        }
        if (i > 0 && indices[i] <= indices[i - 1]) throw ParameterError("activation indices must increase");
    }

    ActivationSchedule s;
    s.indices.assign(indices.begin(), indices.end());
    s.timestamps.reserve(indices.size());
    for (auto i : indices) s.timestamps.push_back(start + static_cast<EpochSeconds>(i) * interval);
    s.k_sigma = k_sigma;
    s.interval = interval;
    s.channel = std::move(channel);
    return s;
}

}  // namespace sensorfft
