#include "sensorfft/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "sensorfft/error.hpp"

namespace sensorfft {

namespace {

template <typename Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const StageError&) {
        throw;
    } catch (const Error& e) {
        throw StageError(name, e);
    }
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

void validate(const PipelineConfig& config) {
    if (config.interval <= 0) throw ParameterError("interval must be positive");
    if (!(config.threshold > 0.0 && config.threshold <= 1.0)) throw ParameterError("threshold must lie in (0, 1]");
    if (!(config.k_sigma >= 0.0) || !std::isfinite(config.k_sigma)) throw ParameterError("k_sigma must be >= 0");
}

double oracle_tolerance(std::span<const double> values) {
    double l1 = 0.0;
    for (double v : values) l1 += std::abs(v);
    return 1e-9 * (1.0 + l1);
}

PipelineResult run(std::span<const SampleRecord> records, const PipelineConfig& config) {
    stage("config", [&] { validate(config); });
    const auto cleaned = stage("clean_sort", [&] { return clean_sort(records, config.channel); });
    const auto series = stage("resample_uniform", [&] {
        return resample_uniform(cleaned, config.interval, config.channel);
    });
    return run(series, config);
}

PipelineResult run(const UniformSeries& series, const PipelineConfig& config) {
    stage("config", [&] { validate(config); });

    PipelineResult result;
    result.original = series;
    result.spectrum = stage("forward_dft", [&] { return forward_dft(series); });

    if (config.verify) {
        stage("verify", [&] {
            const auto reference = naive_dft(series.values);
            const double diff = max_abs_diff(result.spectrum.coefficients, reference.coefficients);
            const double tol = oracle_tolerance(series.values);
            if (!(diff < tol)) {
                throw VerificationError("fast transform deviates from naive DFT by " + std::to_string(diff) +
                                        " (tolerance " + std::to_string(tol) + ")");
            }
        });
    }

    result.selection = stage("select_by_energy", [&] {
        return select_by_energy(result.spectrum, config.threshold);
    });
    result.reconstructed = stage("reconstruct", [&] { return reconstruct(result.spectrum, result.selection); });
    result.reconstructed.channel = series.channel;
    result.metrics = stage("selection_metrics", [&] {
        return selection_metrics(series, result.reconstructed, result.selection);
    });

    auto deriv = stage("derivative", [&] { return derivative(result.reconstructed); });
    // Steps below the transform's round-trip resolution are rounding residue.
    double peak = 0.0;
    for (double v : result.reconstructed.values) peak = std::max(peak, std::abs(v));
    const double floor = 1e-9 * (1.0 + peak) / static_cast<double>(series.interval);
    for (auto& d : deriv) {
        if (std::abs(d) <= floor) d = 0.0;
    }
    const auto indices = stage("detect_activations", [&] { return detect_activations(deriv, config.k_sigma); });
    result.schedule = stage("build_schedule", [&] {
        return build_schedule(indices, series.start, series.interval, series.size(), series.channel,
                              config.k_sigma);
    });
    return result;
}

VerifyReport verify_transform(const UniformSeries& series, const Spectrum& spectrum) {
    const auto& x = series.values;
    if (spectrum.size() != x.size()) {
        throw VerificationError("spectrum has " + std::to_string(spectrum.size()) + " bins but series has " +
                                std::to_string(x.size()) + " samples");
    }

    const auto reference = naive_dft(x);
    const double oracle_diff = max_abs_diff(spectrum.coefficients, reference.coefficients);

    double time_energy = 0.0;
    for (double v : x) time_energy += v * v;
    double freq_energy = 0.0;
    for (double a : amplitude_spectrum(spectrum).amplitudes) freq_energy += a * a;
    freq_energy /= static_cast<double>(x.size());
    const double scale = std::max(time_energy, freq_energy);
    const double parseval_rel = scale == 0.0 ? 0.0 : std::abs(time_energy - freq_energy) / scale;

    const auto back = inverse_dft_with_residue(spectrum).values;
    double roundtrip = 0.0;
    double peak = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        roundtrip = std::max(roundtrip, std::abs(back[i] - x[i]));
        peak = std::max(peak, std::abs(x[i]));
    }

    // NaN deviations fail because deviation < tolerance is false.
    return VerifyReport{
        {"oracle", oracle_diff, oracle_tolerance(x)},
        {"parseval", parseval_rel, 1e-9},
        {"roundtrip", roundtrip, 1e-9 * (1.0 + peak)},
    };
}

}  // namespace sensorfft
