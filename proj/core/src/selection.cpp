#include "sensorfft/selection.hpp"

#include <algorithm>
#include <cmath>

#include "sensorfft/error.hpp"

namespace sensorfft {

std::vector<HarmonicUnit> rank_harmonics(const AmplitudeSpectrum& amplitudes) {
    const auto& a = amplitudes.amplitudes;
    const std::size_t n = a.size();
    std::vector<HarmonicUnit> units;
    if (n == 0) return units;

    units.push_back({HarmonicUnit::Kind::Dc, 0, 0, a[0] * a[0]});
    for (std::size_t k = 1; 2 * k < n; ++k) {
        units.push_back({HarmonicUnit::Kind::Pair, k, n - k, a[k] * a[k] + a[n - k] * a[n - k]});
    }
    if (n % 2 == 0 && n >= 2) {
        const std::size_t nyq = n / 2;
        units.push_back({HarmonicUnit::Kind::Nyquist, nyq, nyq, a[nyq] * a[nyq]});
    }

    std::stable_sort(units.begin(), units.end(), [](const HarmonicUnit& l, const HarmonicUnit& r) {
        if (l.energy != r.energy) return l.energy > r.energy;
        return l.bin < r.bin;
    });
    return units;
}

HarmonicSelection select_by_energy(const Spectrum& spectrum, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw ParameterError("energy threshold must lie in (0, 1]");
    }
    validate(spectrum);

    const auto ranked = rank_harmonics(amplitude_spectrum(spectrum));
    // Summing the total in rank order makes the full prefix reach exactly 1.
    double total = 0.0;
    for (const auto& u : ranked) total += u.energy;

    HarmonicSelection sel;
    sel.threshold = threshold;
    if (total == 0.0) {
        sel.units.push_back({HarmonicUnit::Kind::Dc, 0, 0, 0.0});
        sel.retained = {0};
        sel.energy_fraction = 1.0;
        return sel;
    }

    double cumulative = 0.0;
    for (const auto& u : ranked) {
        sel.units.push_back(u);
        cumulative += u.energy;
        if (cumulative / total >= threshold) break;
    }
    sel.energy_fraction = cumulative / total;

    for (const auto& u : sel.units) {
        sel.retained.push_back(u.bin);
        if (u.kind == HarmonicUnit::Kind::Pair) sel.retained.push_back(u.mirror);
    }
    std::sort(sel.retained.begin(), sel.retained.end());
    return sel;
}

Spectrum truncate_spectrum(const Spectrum& spectrum, const HarmonicSelection& selection) {
    Spectrum out{std::vector<Complex>(spectrum.size()), spectrum.start, spectrum.interval};
    for (std::size_t bin : selection.retained) {
        if (bin >= spectrum.size()) {
            throw SelectionError("retained bin " + std::to_string(bin) + " outside spectrum of size " +
                                 std::to_string(spectrum.size()));
        }
        out.coefficients[bin] = spectrum.coefficients[bin];
    }
    return out;
}

UniformSeries reconstruct(const Spectrum& spectrum, const HarmonicSelection& selection) {
    UniformSeries out;
    out.start = spectrum.start;
    out.interval = spectrum.interval;
    out.values = inverse_dft(truncate_spectrum(spectrum, selection));
    return out;
}

double rmse(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ParameterError("rmse needs equal-length inputs");
    if (a.empty()) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(a.size()));
}

Metrics selection_metrics(const UniformSeries& original, const UniformSeries& reconstructed,
                          const HarmonicSelection& selection) {
    if (original.size() != reconstructed.size()) {
        throw ParameterError("original and reconstructed series differ in length");
    }
    Metrics m;
    m.rmse = rmse(original.values, reconstructed.values);
    m.energy_fraction = selection.energy_fraction;
    m.retained_bins = selection.retained.size();
    m.retained_units = selection.units.size();
    for (const auto& u : selection.units) m.stored_reals += u.stored_reals();
    m.compression_ratio = original.size() == 0
                              ? 0.0
                              : static_cast<double>(m.stored_reals) / static_cast<double>(original.size());
    return m;
}

}  // namespace sensorfft
