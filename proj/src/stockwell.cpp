// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include "tfkit/stockwell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfkit/fft.hpp"
#include "tfkit/parallel.hpp"

namespace tfkit {

ComplexGrid stockwell(const RealSignal& x, double f_lo, double f_hi, BoundaryMode boundary) {
    x.validate();
    const double fs = x.sample_rate;
    if (!(0.0 <= f_lo && f_lo < f_hi && f_hi <= fs / 2.0))
        throw std::invalid_argument("stockwell: need 0 <= f_lo < f_hi <= fs/2");

    // Zero-padding doubles the working length; the grid keeps the original
    // time span at the padded frequency resolution.
    const std::size_t n = x.size();
    const std::size_t work = boundary == BoundaryMode::zero_pad ? 2 * n : n;
    std::vector<cplx> samples(x.samples.begin(), x.samples.end());
    const auto spectrum = dft_forward(samples, work);

    const auto bin_lo = static_cast<std::size_t>(std::ceil(f_lo * static_cast<double>(work) / fs));
    const auto bin_hi = static_cast<std::size_t>(std::floor(f_hi * static_cast<double>(work) / fs));
    if (bin_hi < bin_lo) throw std::invalid_argument("stockwell: band holds no analysis bins");
    const std::size_t n_rows = bin_hi - bin_lo + 1;

    ComplexGrid grid;
    grid.n_freq = n_rows;
    grid.n_time = n;
    grid.values.assign(n_rows * n, cplx(0.0, 0.0));
    grid.freq_axis.resize(n_rows);
    grid.time_axis.resize(n);
    for (std::size_t r = 0; r < n_rows; ++r)
        grid.freq_axis[r] = static_cast<double>(bin_lo + r) * fs / static_cast<double>(work);
    for (std::size_t t = 0; t < n; ++t) grid.time_axis[t] = static_cast<double>(t) / fs;

    const double mean = spectrum[0].real() / static_cast<double>(work);

    parallel_for(n_rows, [&](std::size_t begin, std::size_t end) {
        std::vector<cplx> voice(work);
        for (std::size_t r = begin; r < end; ++r) {
            const std::size_t bin = bin_lo + r;
            if (bin == 0) {
                // The |f| factor sends the f = 0 integrand to zero; the row is
                // defined as the signal mean so the grid stays consistent with X(0).
                for (std::size_t t = 0; t < n; ++t) grid.at(r, t) = cplx(mean, 0.0);
                continue;
            }
            const double inv_n2 = 1.0 / (static_cast<double>(bin) * static_cast<double>(bin));
            // Shifted spectrum under the Gaussian voice, sampled on signed
            // offsets m in [-work/2, work/2).
            for (std::size_t slot = 0; slot < work; ++slot) {
                const double m = (slot <= (work - 1) / 2)
                                     ? static_cast<double>(slot)
                                     : static_cast<double>(slot) - static_cast<double>(work);
                const double gauss =
                    std::exp(-2.0 * std::numbers::pi * std::numbers::pi * m * m * inv_n2);
                voice[slot] = spectrum[(slot + bin) % work] * gauss;
            }
            auto row = dft_inverse(voice);
            for (std::size_t t = 0; t < n; ++t)
                grid.at(r, t) = row[t] * static_cast<double>(work);
        }
    });
    return grid;
}

TFGrid stockwell_power(const ComplexGrid& g) {
    TFGrid out;
    out.n_freq = g.n_freq;
    out.n_time = g.n_time;
    out.freq_axis = g.freq_axis;
    out.time_axis = g.time_axis;
    out.kind = TransformKind::stockwell;
    out.scale = ScaleTag::linear;
    out.values.resize(g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i) out.values[i] = std::norm(g.values[i]);
    return out;
}

}  // namespace tfkit
