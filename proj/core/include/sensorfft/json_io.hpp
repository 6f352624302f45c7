#pragma once

#include <string>
#include <string_view>

#include "sensorfft/activation.hpp"
#include "sensorfft/pipeline.hpp"
#include "sensorfft/selection.hpp"
#include "sensorfft/spectral.hpp"

// Text formats written by the CLI. Keys are lower_snake_case, reals are
// printed with 17 significant digits and every document ends in a newline.
// Output depends only on the values, so equal inputs give byte-equal files.

namespace sensorfft {

/// {"n", "start", "interval_s", "coefficients": [[re, im], ...]}
std::string spectrum_to_json(const Spectrum& spectrum);

/// Throws FormatError on malformed JSON, missing keys or n != coefficient count.
Spectrum spectrum_from_json(std::string_view text);

/// {"threshold", "retained_bins", "retained_units", "energy_fraction", "rmse", "compression_ratio"}
std::string selection_to_json(const HarmonicSelection& selection, const Metrics& metrics);

/// {"channel", "k_sigma", "interval_s", "activations": [{"index", "timestamp"}, ...]}
std::string schedule_to_json(const ActivationSchedule& schedule);

/// One document holding the run parameters, the selection, metrics and schedule.
std::string result_to_json(const PipelineResult& result, const PipelineConfig& config);

/// `timestamp,original,reconstructed` rows for plotting a reconstruction.
std::string reconstruction_csv(const PipelineResult& result);

}  // namespace sensorfft
