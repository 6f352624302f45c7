#pragma once

#include <cstddef>
#include <vector>

#include "sensorfft/ingest.hpp"
#include "sensorfft/spectral.hpp"

namespace sensorfft {

/// Threshold from the published energy criterion.
inline constexpr double kDefaultEnergyThreshold = 0.5;
/// Stricter preset ("90% energy method").
inline constexpr double kStrictEnergyThreshold = 0.9;

/// The atomic object kept or dropped during selection. For a real signal,
/// bins k and N-k describe one sinusoid and are always kept together.
struct HarmonicUnit {
    enum class Kind { Dc, Pair, Nyquist };

    Kind kind = Kind::Dc;
    std::size_t bin = 0;     ///< lower bin index (k for a pair)
    std::size_t mirror = 0;  ///< N - k for a pair, otherwise equal to bin
    double energy = 0.0;     ///< sum of A[b]^2 over member bins

    std::size_t bin_count() const noexcept { return kind == Kind::Pair ? 2 : 1; }
    /// Reals needed to store the unit: the conjugate half of a pair is implied.
    std::size_t stored_reals() const noexcept { return kind == Kind::Pair ? 2 : 1; }

    friend bool operator==(const HarmonicUnit&, const HarmonicUnit&) = default;
};

struct HarmonicSelection {
    std::vector<std::size_t> retained;  ///< bin indices, ascending
    std::vector<HarmonicUnit> units;    ///< chosen units in rank order
    double energy_fraction = 0.0;
    double threshold = kDefaultEnergyThreshold;
};

struct Metrics {
    double rmse = 0.0;
    double energy_fraction = 0.0;
    double compression_ratio = 0.0;
    std::size_t stored_reals = 0;
    std::size_t retained_bins = 0;
    std::size_t retained_units = 0;
};

/// Groups bins into DC, conjugate pairs {k, N-k} for 1 <= k < N/2, and the
/// Nyquist bin (even N), ordered by unit energy descending. Ties go to the
/// unit with the lower bin index.
std::vector<HarmonicUnit> rank_harmonics(const AmplitudeSpectrum& amplitudes);

/// Shortest prefix of the ranked units whose energy reaches `threshold` of the total.
/// An all-zero spectrum selects DC alone with energy_fraction = 1.
/// Throws ParameterError unless 0 < threshold <= 1.
HarmonicSelection select_by_energy(const Spectrum& spectrum, double threshold);

/// Keeps the coefficients at retained bins and zeroes the rest.
/// Throws SelectionError for a retained index outside the spectrum.
Spectrum truncate_spectrum(const Spectrum& spectrum, const HarmonicSelection& selection);

/// Inverse transform of the truncated spectrum on the spectrum's time grid.
UniformSeries reconstruct(const Spectrum& spectrum, const HarmonicSelection& selection);

/// Throws ParameterError if the two series differ in length.
Metrics selection_metrics(const UniformSeries& original, const UniformSeries& reconstructed,
                          const HarmonicSelection& selection);

/// Root-mean-square difference of two equal-length sequences.
double rmse(std::span<const double> a, std::span<const double> b);

}  // namespace sensorfft
