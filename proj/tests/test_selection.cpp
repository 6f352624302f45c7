#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sensorfft/error.hpp"
#include "sensorfft/selection.hpp"

using namespace sensorfft;
using sensorfft::testing::max_abs_diff;
using sensorfft::testing::random_sensor_like;
using Kind = HarmonicUnit::Kind;

namespace {

Spectrum spec(std::vector<Complex> c) { return Spectrum{std::move(c), 0, 900}; }

UniformSeries series(std::vector<double> v) { return UniformSeries{0, 900, std::move(v), "co2_ppm"}; }

// Energy of a set of bins, summed straight from the coefficients.
double bin_energy(const Spectrum& s, const std::vector<std::size_t>& bins) {
    double e = 0;
    for (auto b : bins) e += std::norm(s.coefficients[b]);
    return e;
}

std::vector<std::size_t> bins_of(std::span<const HarmonicUnit> units) {
    std::vector<std::size_t> out;
    for (const auto& u : units) {
        out.push_back(u.bin);
        if (u.kind == Kind::Pair) out.push_back(u.mirror);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(RankHarmonics, OrdersByUnitEnergy) {
    const auto units = rank_harmonics(AmplitudeSpectrum{{4, 2, 0, 2}});
    ASSERT_EQ(units.size(), 3u);
    EXPECT_EQ(units[0].kind, Kind::Dc);
    EXPECT_DOUBLE_EQ(units[0].energy, 16);
    EXPECT_EQ(units[1].kind, Kind::Pair);
    EXPECT_EQ(units[1].bin, 1u);
    EXPECT_EQ(units[1].mirror, 3u);
    EXPECT_DOUBLE_EQ(units[1].energy, 8);
    EXPECT_EQ(units[2].kind, Kind::Nyquist);
    EXPECT_EQ(units[2].bin, 2u);
    EXPECT_DOUBLE_EQ(units[2].energy, 0);
}

TEST(RankHarmonics, TiesGoToLowerIndex) {
    const auto units = rank_harmonics(AmplitudeSpectrum{{1, 1, 1, 1}});
    ASSERT_EQ(units.size(), 3u);
    EXPECT_EQ(units[0].kind, Kind::Pair);
    EXPECT_EQ(units[1].kind, Kind::Dc);
    EXPECT_EQ(units[2].kind, Kind::Nyquist);
}

TEST(RankHarmonics, SingleBinAndOddLength) {
    const auto one = rank_harmonics(AmplitudeSpectrum{{3}});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].kind, Kind::Dc);

    const auto odd = rank_harmonics(AmplitudeSpectrum{{0, 1, 2, 2, 1}});
    ASSERT_EQ(odd.size(), 3u);  // DC + pairs {1,4}, {2,3}; no Nyquist
    EXPECT_EQ(odd[0].bin, 2u);
    EXPECT_EQ(odd[0].mirror, 3u);
    EXPECT_TRUE(std::none_of(odd.begin(), odd.end(), [](auto& u) { return u.kind == Kind::Nyquist; }));
}

TEST(SelectByEnergy, HalfThreshold) {
    const auto sel = select_by_energy(spec({4, 2, 0, 2}), 0.5);
    EXPECT_EQ(sel.retained, (std::vector<std::size_t>{0}));
    EXPECT_NEAR(sel.energy_fraction, 16.0 / 24.0, 1e-15);
    EXPECT_EQ(sel.threshold, 0.5);
}

TEST(SelectByEnergy, NinetyPercent) {
    const auto sel = select_by_energy(spec({4, 2, 0, 2}), 0.9);
    EXPECT_EQ(sel.retained, (std::vector<std::size_t>{0, 1, 3}));
    EXPECT_EQ(sel.energy_fraction, 1.0);
    EXPECT_EQ(sel.units.size(), 2u);
}

TEST(SelectByEnergy, ConstantSignalKeepsDcOnly) {
    for (double theta : {0.01, 0.5, 0.9, 1.0}) {
        const auto sel = select_by_energy(forward_dft(std::vector<double>{7, 7, 7, 7, 7}), theta);
        EXPECT_EQ(sel.retained, (std::vector<std::size_t>{0}));
        EXPECT_EQ(sel.energy_fraction, 1.0);
    }
}

TEST(SelectByEnergy, AllZeroSelectsDc) {
    const auto sel = select_by_energy(spec({0, 0, 0, 0}), 0.7);
    EXPECT_EQ(sel.retained, (std::vector<std::size_t>{0}));
    EXPECT_EQ(sel.energy_fraction, 1.0);
    ASSERT_EQ(sel.units.size(), 1u);
    EXPECT_EQ(sel.units[0].kind, Kind::Dc);
}

TEST(SelectByEnergy, ThresholdRange) {
    EXPECT_THROW(select_by_energy(spec({1, 0}), 0.0), ParameterError);
    EXPECT_THROW(select_by_energy(spec({1, 0}), 1.5), ParameterError);
    EXPECT_THROW(select_by_energy(spec({1, 0}), -0.1), ParameterError);
    EXPECT_THROW(select_by_energy(spec({1, 0}), NAN), ParameterError);
    EXPECT_NO_THROW(select_by_energy(spec({1, 0}), 1.0));
}

TEST(TruncateSpectrum, Masks) {
    const auto X = spec({4, 2, 0, 2});
    HarmonicSelection all;
    all.retained = {0, 1, 2, 3};
    EXPECT_EQ(truncate_spectrum(X, all), X);

    HarmonicSelection dc;
    dc.retained = {0};
    const auto dc_only = spec({8, 0, 0, 0});
    EXPECT_EQ(truncate_spectrum(dc_only, dc), dc_only);
    EXPECT_EQ(truncate_spectrum(X, dc).coefficients, (std::vector<Complex>{4, 0, 0, 0}));
    EXPECT_EQ(truncate_spectrum(X, dc).interval, 900);

    HarmonicSelection bad;
    bad.retained = {4};
    EXPECT_THROW(truncate_spectrum(X, bad), SelectionError);
}

TEST(Reconstruct, Examples) {
    const auto full_x = std::vector<double>{3, -1, 4, 1, -5, 9};
    const auto X = forward_dft(series(full_x));
    const auto all = select_by_energy(X, 1.0);
    EXPECT_LT(max_abs_diff(reconstruct(X, all).values, full_x), 1e-9);

    HarmonicSelection dc;
    dc.retained = {0};
    EXPECT_LT(max_abs_diff(reconstruct(forward_dft(series({0, 1, 0, -1})), dc).values,
                           std::vector<double>{0, 0, 0, 0}),
              1e-15);
    const auto constant = reconstruct(forward_dft(series({2, 2, 2, 2})), dc);
    EXPECT_EQ(constant.values, (std::vector<double>{2, 2, 2, 2}));
    EXPECT_EQ(constant.interval, 900);
}

TEST(SelectionMetrics, RmseAndCompression) {
    HarmonicSelection sel;
    sel.units = {{Kind::Dc, 0, 0, 1.0}};
    sel.retained = {0};
    sel.energy_fraction = 0.8;
    const auto a = series({1, 2, 3});
    EXPECT_EQ(selection_metrics(a, a, sel).rmse, 0.0);
    EXPECT_DOUBLE_EQ(selection_metrics(a, series({4, 5, 6}), sel).rmse, 3.0);
    EXPECT_EQ(selection_metrics(a, a, sel).energy_fraction, 0.8);
    EXPECT_THROW(selection_metrics(a, series({1, 2}), sel), ParameterError);

    // N = 96 with DC + 12 pairs: 1 + 12 * 2 = 25 stored reals.
    HarmonicSelection big;
    big.units.push_back({Kind::Dc, 0, 0, 1.0});
    for (std::size_t k = 1; k <= 12; ++k) big.units.push_back({Kind::Pair, k, 96 - k, 1.0});
    big.retained = bins_of(big.units);
    const auto s96 = series(std::vector<double>(96, 0.0));
    const auto m = selection_metrics(s96, s96, big);
    EXPECT_EQ(m.stored_reals, 25u);
    EXPECT_EQ(m.retained_units, 13u);
    EXPECT_EQ(m.retained_bins, 25u);
    EXPECT_DOUBLE_EQ(m.compression_ratio, 25.0 / 96.0);
    EXPECT_NEAR(m.compression_ratio, 0.26, 0.005);
}

TEST(SelectionProperties, MinimalPrefixBruteForce) {
    std::mt19937_64 rng(64);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        const auto X = forward_dft(random_sensor_like(rng, n));
        const auto ranked = rank_harmonics(amplitude_spectrum(X));
        const double total = bin_energy(X, bins_of(ranked));
        for (double theta : {0.1, 0.5, 0.75, 0.9, 0.99, 1.0}) {
            const auto sel = select_by_energy(X, theta);
            // Selected units are exactly a prefix of the ranking.
            ASSERT_LE(sel.units.size(), ranked.size());
            EXPECT_TRUE(std::equal(sel.units.begin(), sel.units.end(), ranked.begin()));
            EXPECT_GE(sel.energy_fraction, theta);
            // Every shorter prefix falls short.
            for (std::size_t len = 1; len < sel.units.size(); ++len) {
                const double e = bin_energy(X, bins_of(std::span(ranked).first(len)));
                EXPECT_LT(e / total, theta * (1 + 1e-12)) << "n=" << n << " theta=" << theta << " len=" << len;
            }
            EXPECT_NEAR(sel.energy_fraction, bin_energy(X, sel.retained) / total, 1e-12);
        }
    }
}

TEST(SelectionProperties, PairsKeptWholeAndIndicesValid) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 120;
        const auto X = forward_dft(random_sensor_like(rng, n));
        const auto sel = select_by_energy(X, 0.05 + 0.95 * static_cast<double>(rng() % 1000) / 1000.0);
        const std::set<std::size_t> kept(sel.retained.begin(), sel.retained.end());
        EXPECT_EQ(kept.size(), sel.retained.size());
        for (auto k : kept) {
            EXPECT_LT(k, n);
            if (k != 0 && 2 * k != n) EXPECT_TRUE(kept.count(n - k)) << n << ":" << k;
        }
        EXPECT_LT(inverse_dft_with_residue(truncate_spectrum(X, sel)).max_imag_residue, 1e-9);
    }
}

TEST(SelectionProperties, MonotoneInThreshold) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto X = forward_dft(random_sensor_like(rng, 2 + rng() % 96));
        std::vector<std::size_t> prev;
        for (double theta = 0.05; theta <= 1.0; theta += 0.05) {
            const auto sel = select_by_energy(X, theta);
            EXPECT_TRUE(std::includes(sel.retained.begin(), sel.retained.end(), prev.begin(), prev.end()));
            prev = sel.retained;
        }
    }
}

TEST(SelectionProperties, ErrorDecaysAsUnitsAppended) {
    std::mt19937_64 rng(96);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng() % 95;
        const auto x = random_sensor_like(rng, n);
        const auto X = forward_dft(series(x));
        const auto ranked = rank_harmonics(amplitude_spectrum(X));
        double prev = std::numeric_limits<double>::infinity();
        for (std::size_t len = 1; len <= ranked.size(); ++len) {
            HarmonicSelection sel;
            sel.units.assign(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(len));
            sel.retained = bins_of(sel.units);
            const double e = rmse(reconstruct(X, sel).values, x);
            EXPECT_LE(e, prev + 1e-12);
            prev = e;
        }
        EXPECT_LT(prev, 1e-9);
    }
}
