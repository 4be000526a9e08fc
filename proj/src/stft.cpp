// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include "tfkit/stft.hpp"

#include <cmath>
#include <stdexcept>

#include "tfkit/fft.hpp"
#include "tfkit/parallel.hpp"

namespace tfkit {

namespace {

ComplexGrid stft_core(std::span<const cplx> samples, double fs, const Window& w,
                      std::size_t hop, std::size_t nfft, bool one_sided) {
    const std::size_t win_len = w.size();
    if (hop == 0) throw std::invalid_argument("stft: hop must be >= 1");
    if (nfft < win_len) throw std::invalid_argument("stft: nfft must cover the window length");
    if (samples.empty()) throw std::invalid_argument("stft: empty signal");

    const std::size_t pad = win_len / 2;
    const std::size_t n_padded = samples.size() + 2 * pad;
    const std::size_t n_frames = (n_padded - win_len) / hop + 1;
    const std::size_t n_bins = one_sided ? nfft / 2 + 1 : nfft;

    ComplexGrid grid;
    grid.n_freq = n_bins;
    grid.n_time = n_frames;
    grid.values.assign(n_bins * n_frames, cplx(0.0, 0.0));
    grid.freq_axis.resize(n_bins);
    grid.time_axis.resize(n_frames);
    for (std::size_t k = 0; k < n_bins; ++k)
        grid.freq_axis[k] = static_cast<double>(k) * fs / static_cast<double>(nfft);
    for (std::size_t m = 0; m < n_frames; ++m)
        grid.time_axis[m] = static_cast<double>(m * hop) / fs;

    parallel_for(n_frames, [&](std::size_t begin, std::size_t end) {
        std::vector<cplx> frame(nfft);
        for (std::size_t m = begin; m < end; ++m) {
            std::fill(frame.begin(), frame.end(), cplx(0.0, 0.0));
            const std::size_t start = m * hop;  // position in the padded signal
            for (std::size_t i = 0; i < win_len; ++i) {
                const std::size_t padded_idx = start + i;
                if (padded_idx < pad || padded_idx >= pad + samples.size()) continue;
                // Real windows: the conjugate in x * conj(w) is the window itself.
                frame[i] = samples[padded_idx - pad] * w.coefficients[i];
            }
            auto spectrum = dft_forward(frame, nfft);
            for (std::size_t k = 0; k < n_bins; ++k) grid.at(k, m) = spectrum[k];
        }
    });
    return grid;
}

}  // namespace

ComplexGrid stft(const RealSignal& x, const Window& w, std::size_t hop, std::size_t nfft) {
    x.validate();
    std::vector<cplx> samples(x.samples.begin(), x.samples.end());
    return stft_core(samples, x.sample_rate, w, hop, nfft, true);
}

ComplexGrid stft(const ComplexSignal& x, const Window& w, std::size_t hop, std::size_t nfft) {
    x.validate();
    return stft_core(x.samples, x.sample_rate, w, hop, nfft, false);
}

TFGrid spectrogram(const ComplexGrid& g, TransformKind kind) {
    TFGrid out;
    out.n_freq = g.n_freq;
    out.n_time = g.n_time;
    out.freq_axis = g.freq_axis;
    out.time_axis = g.time_axis;
    out.kind = kind;
    out.scale = ScaleTag::linear;
    out.values.resize(g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i) out.values[i] = std::norm(g.values[i]);
    return out;
}

TFGrid gabor(const RealSignal& x, double alpha, std::size_t hop, std::size_t nfft) {
    const Window w = make_gaussian_window(alpha, x.sample_rate);
    return spectrogram(stft(x, w, hop, nfft), TransformKind::gabor);
}

}  // namespace tfkit
