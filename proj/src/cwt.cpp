// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include "tfkit/cwt.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfkit/fft.hpp"
#include "tfkit/parallel.hpp"

namespace tfkit {

ScaleGrid make_scale_grid(const MorletParams& p, double f_min, double f_max,
                          int voices_per_octave) {
    p.validate();
    if (f_min <= 0.0 || f_max <= f_min)
        throw std::invalid_argument("make_scale_grid: need 0 < f_min < f_max");
    if (voices_per_octave < 1)
        throw std::invalid_argument("make_scale_grid: voices_per_octave must be >= 1");

    ScaleGrid grid;
    grid.voices_per_octave = voices_per_octave;
    grid.f_min = f_min;
    grid.f_max = f_max;
    const double v = static_cast<double>(voices_per_octave);
    for (int j = 0;; ++j) {
        const double f = f_min * std::pow(2.0, static_cast<double>(j) / v);
        if (f > f_max * (1.0 + 1e-12)) break;
        grid.scales.push_back(p.f_c / f);
    }
    return grid;
}

std::vector<cplx> morlet_wavelet(const MorletParams& p, double scale, double sample_rate) {
    p.validate();
    if (scale <= 0.0) throw std::invalid_argument("morlet_wavelet: scale must be positive");
    if (sample_rate <= 0.0) throw std::invalid_argument("morlet_wavelet: sample rate must be positive");

    const double sigma = std::sqrt(1.0 / (2.0 * p.alpha));
    const auto half = static_cast<std::size_t>(std::floor(4.0 * sigma * scale * sample_rate));
    std::vector<cplx> psi(2 * half + 1);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const double t = (static_cast<double>(i) - static_cast<double>(half)) / sample_rate;
        const double u = t / scale;
        psi[i] = std::exp(-p.alpha * u * u) *
                 std::polar(1.0, 2.0 * std::numbers::pi * p.f_c * u);
    }
    return psi;
}

CwtResult cwt(const RealSignal& x, const MorletParams& p, const ScaleGrid& grid,
              BoundaryMode boundary) {
    x.validate();
    p.validate();
    if (grid.scales.empty()) throw std::invalid_argument("cwt: scale grid is empty");

    const std::size_t n = x.size();
    const double fs = x.sample_rate;
    const std::size_t n_rows = grid.scales.size();

    CwtResult result;
    result.scales = grid.scales;
    result.grid.n_freq = n_rows;
    result.grid.n_time = n;
    result.grid.values.assign(n_rows * n, cplx(0.0, 0.0));
    result.grid.freq_axis.resize(n_rows);
    result.grid.time_axis.resize(n);
    for (std::size_t r = 0; r < n_rows; ++r) result.grid.freq_axis[r] = p.f_c / grid.scales[r];
    for (std::size_t t = 0; t < n; ++t) result.grid.time_axis[t] = static_cast<double>(t) / fs;

    // Common work length: large enough that the zero-padded variant is a true
    // linear correlation for every scale in the grid.
    const double sigma = std::sqrt(1.0 / (2.0 * p.alpha));
    const double largest_scale = grid.scales.front();
    std::size_t max_half = static_cast<std::size_t>(std::floor(4.0 * sigma * largest_scale * fs));
    if (2 * max_half + 1 > 4 * n) {
        max_half = 2 * n;
        result.truncated = true;
    }
    const std::size_t work =
        boundary == BoundaryMode::circular ? n : detail::next_pow2(n + 2 * max_half + 1);

    std::vector<cplx> padded(x.samples.begin(), x.samples.end());
    const auto signal_spectrum = dft_forward(padded, work);

    parallel_for(n_rows, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            const double a = grid.scales[r];
            auto psi = morlet_wavelet(p, a, fs);
            if (psi.size() > 2 * max_half + 1) {
                // Clamp oversized supports; flagged via result.truncated.
                const std::size_t trim = (psi.size() - (2 * max_half + 1)) / 2;
                psi.assign(psi.begin() + static_cast<std::ptrdiff_t>(trim),
                           psi.end() - static_cast<std::ptrdiff_t>(trim));
            }
            const std::size_t half = psi.size() / 2;
            const double norm = 1.0 / std::sqrt(a);

            // Kernel h[k] = conj(psi(k/fs / a)) / sqrt(a), wrapped onto the
            // work buffer so row[b] = sum_k h[k] x[b+k].
            std::vector<cplx> kernel(work, cplx(0.0, 0.0));
            for (std::size_t i = 0; i < psi.size(); ++i) {
                const long k = static_cast<long>(i) - static_cast<long>(half);
                const std::size_t slot =
                    static_cast<std::size_t>((k % static_cast<long>(work) + static_cast<long>(work)) %
                                             static_cast<long>(work));
                kernel[slot] += std::conj(psi[i]) * norm;
            }
            for (auto& v : kernel) v = std::conj(v);
            auto kernel_spectrum = dft_forward(kernel, work);
            std::vector<cplx> product(work);
            for (std::size_t k = 0; k < work; ++k)
                product[k] = signal_spectrum[k] * std::conj(kernel_spectrum[k]);
            auto row = dft_inverse(product);
            for (std::size_t b = 0; b < n; ++b) result.grid.at(r, b) = row[b];
        }
    });
    return result;
}

TFGrid scalogram(const CwtResult& transform) {
    TFGrid out;
    out.n_freq = transform.grid.n_freq;
    out.n_time = transform.grid.n_time;
    out.freq_axis = transform.grid.freq_axis;
    out.time_axis = transform.grid.time_axis;
    out.kind = TransformKind::cwt;
    out.scale = ScaleTag::linear;
    out.log_freq_hint = true;
    out.values.resize(transform.grid.values.size());
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = std::norm(transform.grid.values[i]);
    return out;
}

}  // namespace tfkit
