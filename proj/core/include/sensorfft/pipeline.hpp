#pragma once

#include <span>

#include "sensorfft/activation.hpp"
#include "sensorfft/ingest.hpp"
#include "sensorfft/selection.hpp"
#include "sensorfft/spectral.hpp"

namespace sensorfft {

struct PipelineConfig {
    Channel channel = Channel::Co2;
    std::int64_t interval = 900;  ///< resampling grid, seconds
    double threshold = kDefaultEnergyThreshold;
    double k_sigma = kDefaultKSigma;
    bool verify = false;  ///< cross-check the fast transform against naive_dft
};

/// Throws ParameterError unless interval > 0, 0 < threshold <= 1 and k_sigma >= 0.
void validate(const PipelineConfig& config);

struct PipelineResult {
    UniformSeries original;
    Spectrum spectrum;
    HarmonicSelection selection;
    Metrics metrics;
    ActivationSchedule schedule;
    UniformSeries reconstructed;
};

/// Full run from raw records: clean_sort, resample_uniform, then the series overload.
/// Every stage failure is rethrown as a StageError naming the stage.
PipelineResult run(std::span<const SampleRecord> records, const PipelineConfig& config);

/// Run on an already uniform series. config.channel and config.interval are unused.
PipelineResult run(const UniformSeries& series, const PipelineConfig& config);

/// Tolerance for fast-vs-naive agreement: 1e-9 * (1 + sum |x|).
double oracle_tolerance(std::span<const double> values);

struct VerifyCheck {
    const char* name;
    double deviation;
    double tolerance;

    bool passed() const noexcept { return deviation < tolerance; }
};

struct VerifyReport {
    VerifyCheck oracle;     ///< max |X - naive_dft(x)|
    VerifyCheck parseval;   ///< relative gap between sum x^2 and sum A^2 / N
    VerifyCheck roundtrip;  ///< max |inverse(X) - x|

    bool passed() const noexcept { return oracle.passed() && parseval.passed() && roundtrip.passed(); }
};

/// Runs the three transform checks on `series` against `spectrum`, which is
/// normally forward_dft(series) but may come from elsewhere (e.g. a file).
/// Throws VerificationError if the spectrum size differs from the series length.
VerifyReport verify_transform(const UniformSeries& series, const Spectrum& spectrum);

}  // namespace sensorfft
