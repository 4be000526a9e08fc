// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include "tfkit/window.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfkit/fft.hpp"

namespace tfkit {

Window make_window(WindowKind kind, std::size_t length, double alpha, double sample_rate) {
    if (length < 1) throw std::invalid_argument("make_window: length must be >= 1");
    Window w;
    w.kind = kind;
    w.alpha = alpha;
    w.sample_rate = sample_rate;
    w.coefficients.resize(length);

    switch (kind) {
        case WindowKind::rectangular:
            for (auto& c : w.coefficients) c = 1.0;
            break;
        case WindowKind::hann:
            if (length == 1) {
                w.coefficients[0] = 1.0;
            } else {
                for (std::size_t i = 0; i < length; ++i)
                    w.coefficients[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi *
                                                             static_cast<double>(i) /
                                                             static_cast<double>(length - 1));
            }
            break;
        case WindowKind::gaussian: {
            if (alpha <= 0.0) throw std::invalid_argument("make_window: gaussian needs alpha > 0");
            if (sample_rate <= 0.0)
                throw std::invalid_argument("make_window: gaussian needs a positive sample rate");
            const double center = (static_cast<double>(length) - 1.0) / 2.0;
            for (std::size_t i = 0; i < length; ++i) {
                const double t = (static_cast<double>(i) - center) / sample_rate;
                w.coefficients[i] = std::exp(-alpha * t * t);
            }
            break;
        }
    }
    return w;
}

Window make_gaussian_window(double alpha, double sample_rate) {
    if (alpha <= 0.0) throw std::invalid_argument("make_gaussian_window: alpha must be positive");
    if (sample_rate <= 0.0)
        throw std::invalid_argument("make_gaussian_window: sample rate must be positive");
    const double sigma = std::sqrt(1.0 / (2.0 * alpha));
    const auto half = static_cast<std::size_t>(std::floor(4.0 * sigma * sample_rate));
    return make_window(WindowKind::gaussian, 2 * half + 1, alpha, sample_rate);
}

double time_bandwidth_product(const Window& w, double sample_rate) {
    if (sample_rate <= 0.0)
        throw std::invalid_argument("time_bandwidth_product: sample rate must be positive");
    const std::size_t n = w.size();

    double energy = 0.0;
    for (const double c : w.coefficients) energy += c * c;
    if (energy <= 0.0) throw std::invalid_argument("time_bandwidth_product: window has zero energy");

    // RMS duration of |w(t)|^2 treated as a density.
    double t_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        t_mean += (static_cast<double>(i) / sample_rate) * w.coefficients[i] * w.coefficients[i];
    t_mean /= energy;
    double t_var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = static_cast<double>(i) / sample_rate - t_mean;
        t_var += d * d * w.coefficients[i] * w.coefficients[i];
    }
    t_var /= energy;

    // RMS bandwidth on a finely padded two-sided spectrum.
    const std::size_t nfft = detail::next_pow2(std::max<std::size_t>(4096, 16 * n));
    std::vector<cplx> padded(w.coefficients.begin(), w.coefficients.end());
    auto spectrum = dft_forward(padded, nfft);

    double f_energy = 0.0, f_mean = 0.0;
    std::vector<double> freq(nfft);
    for (std::size_t k = 0; k < nfft; ++k) {
        const double k_signed = (k <= nfft / 2) ? static_cast<double>(k)
                                                : static_cast<double>(k) - static_cast<double>(nfft);
        freq[k] = k_signed * sample_rate / static_cast<double>(nfft);
        const double p = std::norm(spectrum[k]);
        f_energy += p;
        f_mean += freq[k] * p;
    }
    f_mean /= f_energy;
    double f_var = 0.0;
    for (std::size_t k = 0; k < nfft; ++k) {
        const double d = freq[k] - f_mean;
        f_var += d * d * std::norm(spectrum[k]);
    }
    f_var /= f_energy;

    return std::sqrt(t_var) * std::sqrt(f_var);
}

}  // namespace tfkit
