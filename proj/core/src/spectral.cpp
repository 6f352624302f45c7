#include "sensorfft/spectral.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

#include "sensorfft/error.hpp"

namespace sensorfft {

namespace {

// Prime factors above this go through Bluestein instead of an O(p^2) butterfly.
constexpr std::size_t kMaxDirectRadix = 64;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// exp(-2*pi*i*m/n) with m already reduced mod n.
Complex unit_root(std::size_t m, std::size_t n) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    return std::polar(1.0, angle);
}

std::vector<std::size_t> factorize(std::size_t n) {
    std::vector<std::size_t> factors;
    while (n % 4 == 0) { factors.push_back(4); n /= 4; }
    while (n % 2 == 0) { factors.push_back(2); n /= 2; }
    for (std::size_t p = 3; p * p <= n; p += 2) {
        while (n % p == 0) { factors.push_back(p); n /= p; }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

void radix2_in_place(std::vector<Complex>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<Complex> roots(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) roots[k] = unit_root(k, n);

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const Complex u = a[i + k];
                const Complex v = a[i + k + half] * roots[k * step];
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
}

/// Decimation-in-time mixed-radix transform. `roots` holds exp(-2*pi*i*m/N) for
/// the top-level N, so a size-n stage uses roots[m * (N / n)].
class MixedRadix {
public:
    explicit MixedRadix(std::size_t n) : n_(n), factors_(factorize(n)), roots_(n) {
        for (std::size_t m = 0; m < n; ++m) roots_[m] = unit_root(m, n);
    }

    std::vector<Complex> run(std::span<const Complex> input) const {
        std::vector<Complex> out(n_);
        std::vector<Complex> scratch;
        recurse(input.data(), 1, out.data(), n_, 0, scratch);
        return out;
    }

private:
    void recurse(const Complex* in, std::size_t stride, Complex* out, std::size_t n, std::size_t depth,
                 std::vector<Complex>& scratch) const {
        if (n == 1) {
            out[0] = in[0];
            return;
        }
        const std::size_t p = factors_[depth];
        const std::size_t m = n / p;
        for (std::size_t r = 0; r < p; ++r) {
            recurse(in + r * stride, stride * p, out + r * m, m, depth + 1, scratch);
        }

        const std::size_t n_step = n_ / n;  // roots_ index step for w_n
        const std::size_t p_step = n_ / p;  // roots_ index step for w_p
        scratch.resize(2 * p);
        Complex* twiddled = scratch.data();
        Complex* result = scratch.data() + p;
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t r = 0; r < p; ++r) {
                twiddled[r] = out[r * m + k] * roots_[(r * k % n) * n_step];
            }
            for (std::size_t q = 0; q < p; ++q) {
                Complex acc = twiddled[0];
                for (std::size_t r = 1; r < p; ++r) acc += twiddled[r] * roots_[(r * q % p) * p_step];
                result[q] = acc;
            }
            for (std::size_t q = 0; q < p; ++q) out[q * m + k] = result[q];
        }
    }

    std::size_t n_;
    std::vector<std::size_t> factors_;
    std::vector<Complex> roots_;
};

// Chirp-z: X[k] = c[k] * sum_j (x[j] c[j]) conj(c[k - j]) with c[j] = exp(-i*pi*j^2/N).
std::vector<Complex> bluestein(std::span<const Complex> input) {
    const std::size_t n = input.size();
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;

    std::vector<Complex> chirp(n);
    const std::uint64_t period = 2 * static_cast<std::uint64_t>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t sq = (static_cast<std::uint64_t>(j) * j) % period;
        chirp[j] = std::polar(1.0, -std::numbers::pi * static_cast<double>(sq) / static_cast<double>(n));
    }

    std::vector<Complex> a(m), b(m);
    for (std::size_t j = 0; j < n; ++j) a[j] = input[j] * chirp[j];
    b[0] = std::conj(chirp[0]);
    for (std::size_t j = 1; j < n; ++j) b[j] = b[m - j] = std::conj(chirp[j]);

    radix2_in_place(a);
    radix2_in_place(b);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    // Inverse via conjugation.
    for (auto& z : a) z = std::conj(z);
    radix2_in_place(a);
    const double scale = 1.0 / static_cast<double>(m);

    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = std::conj(a[k]) * scale * chirp[k];
    return out;
}

}  // namespace

void validate(const Spectrum& spectrum) {
    if (spectrum.coefficients.empty()) throw ParameterError("spectrum is empty");
    if (spectrum.interval <= 0) throw ParameterError("spectrum interval must be positive");
    for (const auto& z : spectrum.coefficients) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ParameterError("spectrum contains a non-finite coefficient");
        }
    }
}

std::vector<Complex> fft(std::span<const Complex> input) {
    const std::size_t n = input.size();
    if (n <= 1) return {input.begin(), input.end()};
    if (is_power_of_two(n)) {
        std::vector<Complex> a(input.begin(), input.end());
        radix2_in_place(a);
        return a;
    }
    const auto factors = factorize(n);
    if (factors.back() > kMaxDirectRadix) return bluestein(input);
    return MixedRadix(n).run(input);
}

std::vector<Complex> ifft(std::span<const Complex> input) {
    std::vector<Complex> conj_in(input.size());
    std::transform(input.begin(), input.end(), conj_in.begin(), [](Complex z) { return std::conj(z); });
    auto out = fft(conj_in);
    const double scale = input.empty() ? 1.0 : 1.0 / static_cast<double>(input.size());
    for (auto& z : out) z = std::conj(z) * scale;
    return out;
}

Spectrum forward_dft(std::span<const double> values) {
    std::vector<Complex> in(values.begin(), values.end());
    return Spectrum{fft(in), 0, 1};
}

Spectrum forward_dft(const UniformSeries& series) {
    validate(series);
    auto spectrum = forward_dft(std::span<const double>(series.values));
    spectrum.start = series.start;
    spectrum.interval = series.interval;
    return spectrum;
}

Spectrum naive_dft(std::span<const double> values) {
    const std::size_t n = values.size();
    Spectrum out{std::vector<Complex>(n), 0, 1};
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            acc += values[j] * unit_root((k * j) % n, n);
        }
        out.coefficients[k] = acc;
    }
    return out;
}

AmplitudeSpectrum amplitude_spectrum(const Spectrum& spectrum) {
    AmplitudeSpectrum out;
    out.amplitudes.reserve(spectrum.size());
    for (const auto& z : spectrum.coefficients) out.amplitudes.push_back(std::abs(z));
    return out;
}

InverseResult inverse_dft_with_residue(const Spectrum& spectrum) {
    const auto complex_out = ifft(spectrum.coefficients);
    InverseResult result;
    result.values.reserve(complex_out.size());
    for (const auto& z : complex_out) {
        result.values.push_back(z.real());
        result.max_imag_residue = std::max(result.max_imag_residue, std::abs(z.imag()));
    }
    return result;
}

std::vector<double> inverse_dft(const Spectrum& spectrum) {
    auto result = inverse_dft_with_residue(spectrum);
    assert(conjugate_asymmetry(spectrum.coefficients) > 1e-12 || result.max_imag_residue < 1e-9);
    return std::move(result.values);
}

double conjugate_asymmetry(std::span<const Complex> coefficients) {
    const std::size_t n = coefficients.size();
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t mirror = (n - k) % n;
        worst = std::max(worst, std::abs(coefficients[mirror] - std::conj(coefficients[k])));
    }
    return worst;
}

}  // namespace sensorfft
