#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sensorfft/ingest.hpp"

namespace sensorfft {

using Complex = std::complex<double>;

/// Frequency-domain coefficients X[0..N-1] of a uniform series.
///
/// Convention: the forward transform is unscaled, the inverse carries 1/N.
/// start and interval are carried through so a reconstruction can be
/// placed back on the original time grid.
struct Spectrum {
    std::vector<Complex> coefficients;
    EpochSeconds start = 0;
    std::int64_t interval = 1;

    std::size_t size() const noexcept { return coefficients.size(); }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Throws ParameterError on an empty spectrum, non-positive interval or non-finite component.
void validate(const Spectrum& spectrum);

/// |X[k]| for every bin.
struct AmplitudeSpectrum {
    std::vector<double> amplitudes;

    std::size_t size() const noexcept { return amplitudes.size(); }
};

/// Forward DFT of a complex sequence for any length >= 1.
///
/// Power-of-two lengths use an iterative radix-2 transform. Other lengths are
/// factored and run through a mixed-radix Cooley-Tukey recursion; prime factors
/// above a cutoff are handled by Bluestein's chirp-z convolution.
std::vector<Complex> fft(std::span<const Complex> input);

/// Inverse of fft including the 1/N scale.
std::vector<Complex> ifft(std::span<const Complex> input);

Spectrum forward_dft(const UniformSeries& series);
Spectrum forward_dft(std::span<const double> values);

/// Literal O(N^2) evaluation of the DFT sum, kept as a reference for
/// cross-checking the fast path. Metadata is start = 0, interval = 1.
Spectrum naive_dft(std::span<const double> values);

AmplitudeSpectrum amplitude_spectrum(const Spectrum& spectrum);

struct InverseResult {
    std::vector<double> values;
    double max_imag_residue = 0.0;  ///< largest |Im x[n]| discarded
};

/// Inverse transform keeping real parts, reporting the discarded imaginary residue.
InverseResult inverse_dft_with_residue(const Spectrum& spectrum);

/// Real part of the inverse transform. In debug builds asserts that a
/// conjugate-symmetric spectrum leaves an imaginary residue below 1e-9.
std::vector<double> inverse_dft(const Spectrum& spectrum);

/// Largest |X[N-k] - conj(X[k])| over k = 0..N-1 (k = 0 compares X[0] to its conjugate).
double conjugate_asymmetry(std::span<const Complex> coefficients);

}  // namespace sensorfft
