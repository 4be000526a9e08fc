// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include "tfkit/wvd.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfkit/fft.hpp"
#include "tfkit/parallel.hpp"

namespace tfkit {

LagGrid instantaneous_autocorrelation(const ComplexSignal& x, std::size_t max_lag) {
    x.validate();
    const std::size_t n = x.size();
    if (max_lag > n / 2)
        throw std::invalid_argument("instantaneous_autocorrelation: max_lag exceeds N/2");

    LagGrid grid;
    grid.n_time = n;
    grid.n_lag = 2 * max_lag + 1;
    grid.values.assign(grid.n_time * grid.n_lag, cplx(0.0, 0.0));
    grid.time_axis.resize(n);
    grid.lag_axis.resize(grid.n_lag);
    for (std::size_t t = 0; t < n; ++t) grid.time_axis[t] = static_cast<double>(t) / x.sample_rate;
    for (std::size_t j = 0; j < grid.n_lag; ++j) {
        const long m = static_cast<long>(j) - static_cast<long>(max_lag);
        grid.lag_axis[j] = 2.0 * static_cast<double>(m) / x.sample_rate;
    }

    for (std::size_t t = 0; t < n; ++t) {
        const long nn = static_cast<long>(t);
        for (std::size_t j = 0; j < grid.n_lag; ++j) {
            const long m = static_cast<long>(j) - static_cast<long>(max_lag);
            const long fwd = nn + m, bwd = nn - m;
            if (fwd < 0 || bwd < 0 || fwd >= static_cast<long>(n) || bwd >= static_cast<long>(n))
                continue;
            grid.at(t, j) = x.samples[static_cast<std::size_t>(fwd)] *
                            std::conj(x.samples[static_cast<std::size_t>(bwd)]);
        }
    }
    return grid;
}

std::vector<double> gaussian_kernel(std::size_t length) {
    if (length < 1) throw std::invalid_argument("gaussian_kernel: length must be >= 1");
    if (length % 2 == 0) ++length;
    std::vector<double> taps(length);
    if (length == 1) {
        taps[0] = 1.0;
        return taps;
    }
    const double sigma = static_cast<double>(length) / 6.0;
    const double center = static_cast<double>(length - 1) / 2.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < length; ++i) {
        const double d = (static_cast<double>(i) - center) / sigma;
        taps[i] = std::exp(-0.5 * d * d);
        sum += taps[i];
    }
    for (auto& v : taps) v /= sum;
    return taps;
}

SmoothingKernel default_smoothing_kernel(std::size_t n_time, std::size_t n_freq) {
    (void)n_freq;
    SmoothingKernel k;
    k.time_kernel = gaussian_kernel(std::max<std::size_t>(3, n_time / 10));
    k.freq_kernel = gaussian_kernel(3);
    return k;
}

namespace {

void validate_kernel(const std::vector<double>& taps, std::size_t limit, const char* axis) {
    if (taps.empty() || taps.size() % 2 == 0)
        throw std::invalid_argument(std::string("spwvd: ") + axis + " kernel must have odd length");
    if (taps.size() > limit)
        throw std::invalid_argument(std::string("spwvd: ") + axis + " kernel larger than the grid");
    double sum = 0.0;
    for (std::size_t i = 0; i < taps.size(); ++i) {
        if (taps[i] < 0.0)
            throw std::invalid_argument(std::string("spwvd: ") + axis + " kernel must be nonnegative");
        if (std::abs(taps[i] - taps[taps.size() - 1 - i]) > 1e-12)
            throw std::invalid_argument(std::string("spwvd: ") + axis + " kernel must be symmetric");
        sum += taps[i];
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument(std::string("spwvd: ") + axis + " kernel must sum to 1");
}

// Mirror an out-of-range index back into [0, n): ... 2 1 0 | 0 1 2 ... | n-1 n-2 ...
std::size_t reflect(long i, long n) {
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return static_cast<std::size_t>(i);
}

}  // namespace

TFGrid wvd(const RealSignal& x, const WvdOptions& options) {
    x.validate();
    if (x.size() < 4) throw std::invalid_argument("wvd: need at least 4 samples");

    const ComplexSignal analytic = analytic_signal(x);
    const ComplexSignal work = options.upsample ? upsample2(analytic) : analytic;
    const std::size_t n = work.size();
    const double fs_work = work.sample_rate;

    // Lag transform sizing: by default the lag window spans about half the
    // working signal, so half the frames keep full lag support.
    std::size_t nfft = options.nfft_lag;
    std::size_t max_lag = options.max_lag;
    if (max_lag == 0) {
        nfft = nfft ? nfft : detail::next_pow2((n + 1) / 2);
        max_lag = std::min(nfft / 2 - 1, (n - 1) / 2);
    } else {
        if (max_lag > (n - 1) / 2) throw std::invalid_argument("wvd: max_lag exceeds (N-1)/2");
        if (nfft == 0) nfft = detail::next_pow2(2 * max_lag + 1);
    }
    if (nfft < 2 * max_lag + 1)
        throw std::invalid_argument("wvd: lag transform shorter than the lag window");

    const std::size_t n_bins = nfft / 2 + 1;
    TFGrid grid;
    grid.n_freq = n_bins;
    grid.n_time = n;
    grid.values.assign(n_bins * n, 0.0);
    grid.freq_axis.resize(n_bins);
    grid.time_axis.resize(n);
    grid.kind = TransformKind::wvd;
    grid.signed_values = true;
    grid.interior_begin = std::min(max_lag, n);
    grid.interior_end = n > max_lag ? n - max_lag : 0;
    // tau advances 2/fs_work per lag step, so bin k sits at k*fs_work/(2*nfft).
    for (std::size_t k = 0; k < n_bins; ++k)
        grid.freq_axis[k] = static_cast<double>(k) * fs_work / (2.0 * static_cast<double>(nfft));
    for (std::size_t t = 0; t < n; ++t) grid.time_axis[t] = static_cast<double>(t) / fs_work;

    std::atomic<double> residual{0.0};
    double peak = 0.0;
    for (const auto& v : work.samples) peak = std::max(peak, std::norm(v));

    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        std::vector<cplx> lags(nfft);
        double local_residual = 0.0;
        for (std::size_t t = begin; t < end; ++t) {
            std::fill(lags.begin(), lags.end(), cplx(0.0, 0.0));
            const long nn = static_cast<long>(t);
            const long support = std::min<long>(static_cast<long>(max_lag),
                                                std::min(nn, static_cast<long>(n) - 1 - nn));
            for (long m = -support; m <= support; ++m) {
                const cplx r = work.samples[static_cast<std::size_t>(nn + m)] *
                               std::conj(work.samples[static_cast<std::size_t>(nn - m)]);
                const std::size_t slot = static_cast<std::size_t>(
                    (m + static_cast<long>(nfft)) % static_cast<long>(nfft));
                lags[slot] = r;
            }
            auto column = dft_forward(lags, nfft);
            for (std::size_t k = 0; k < n_bins; ++k) {
                local_residual = std::max(local_residual, std::abs(column[k].imag()));
                grid.at(k, t) = column[k].real();
            }
        }
        double seen = residual.load();
        while (seen < local_residual && !residual.compare_exchange_weak(seen, local_residual)) {}
    });

    // The lag rows are Hermitian, so the transform is real up to rounding;
    // anything bigger means the pipeline is broken.
    const double tolerance = 1e-9 * std::max(1.0, peak * static_cast<double>(nfft));
    if (residual.load() > tolerance)
        throw std::runtime_error("wvd: imaginary residual above tolerance");
    return grid;
}

TFGrid smooth_grid(const TFGrid& grid, const SmoothingKernel& kernel) {
    validate_kernel(kernel.time_kernel, grid.n_time, "time");
    validate_kernel(kernel.freq_kernel, grid.n_freq, "frequency");

    TFGrid out = grid;
    out.kind = TransformKind::spwvd;

    // Identity kernels must reproduce the input bit for bit, so skip the
    // arithmetic entirely for single-tap kernels.
    const bool time_identity = kernel.time_kernel.size() == 1;
    const bool freq_identity = kernel.freq_kernel.size() == 1;

    if (!time_identity) {
        const auto& g = kernel.time_kernel;
        const long half = static_cast<long>(g.size() / 2);
        const long nt = static_cast<long>(grid.n_time);
        TFGrid tmp = out;
        parallel_for(grid.n_freq, [&](std::size_t begin, std::size_t end) {
            for (std::size_t f = begin; f < end; ++f)
                for (long t = 0; t < nt; ++t) {
                    double acc = 0.0;
                    for (long j = -half; j <= half; ++j)
                        acc += g[static_cast<std::size_t>(j + half)] * out.at(f, reflect(t - j, nt));
                    tmp.at(f, static_cast<std::size_t>(t)) = acc;
                }
        });
        out.values.swap(tmp.values);
    }
    if (!freq_identity) {
        const auto& h = kernel.freq_kernel;
        const long half = static_cast<long>(h.size() / 2);
        const long nf = static_cast<long>(grid.n_freq);
        TFGrid tmp = out;
        parallel_for(grid.n_time, [&](std::size_t begin, std::size_t end) {
            for (std::size_t t = begin; t < end; ++t)
                for (long f = 0; f < nf; ++f) {
                    double acc = 0.0;
                    for (long j = -half; j <= half; ++j)
                        acc += h[static_cast<std::size_t>(j + half)] * out.at(reflect(f - j, nf), t);
                    tmp.at(static_cast<std::size_t>(f), t) = acc;
                }
        });
        out.values.swap(tmp.values);
    }
    return out;
}

TFGrid spwvd(const RealSignal& x, const SmoothingKernel& kernel, const WvdOptions& options) {
    return smooth_grid(wvd(x, options), kernel);
}

namespace {

std::size_t nearest_bin(const std::vector<double>& axis, double target) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < axis.size(); ++i)
        if (std::abs(axis[i] - target) < std::abs(axis[best] - target)) best = i;
    return best;
}

// Root-sum-square over the bin and its immediate neighbours; robust against a
// component splitting between two bins.
double band_rss(const TFGrid& grid, std::size_t bin, std::size_t t) {
    double acc = 0.0;
    const std::size_t lo = bin > 0 ? bin - 1 : 0;
    const std::size_t hi = std::min(grid.n_freq - 1, bin + 1);
    for (std::size_t k = lo; k <= hi; ++k) acc += grid.at(k, t) * grid.at(k, t);
    return std::sqrt(acc);
}

}  // namespace

CrossTermReport cross_term_report(const TFGrid& grid, double f1, double f2) {
    if (!(f1 < f2)) throw std::invalid_argument("cross_term_report: need f1 < f2");
    if (grid.n_freq < 3 || grid.n_time < 8)
        throw std::invalid_argument("cross_term_report: grid too small");
    if (f2 > grid.freq_axis.back() || f1 < grid.freq_axis.front())
        throw std::invalid_argument("cross_term_report: frequencies outside the grid");

    const std::size_t t_begin = grid.interior_end > grid.interior_begin ? grid.interior_begin : 0;
    const std::size_t t_end = grid.interior_end > grid.interior_begin ? grid.interior_end : grid.n_time;

    // Ridge bins: strongest time-mean magnitude inside a band around each
    // target frequency.
    auto locate_ridge = [&](double target) {
        const double half_band = (f2 - f1) / 4.0;
        std::size_t lo = nearest_bin(grid.freq_axis, target - half_band);
        std::size_t hi = nearest_bin(grid.freq_axis, target + half_band);
        std::size_t best = lo;
        double best_score = -1.0;
        for (std::size_t k = lo; k <= hi; ++k) {
            double score = 0.0;
            for (std::size_t t = t_begin; t < t_end; ++t) score += std::abs(grid.at(k, t));
            if (score > best_score) {
                best_score = score;
                best = k;
            }
        }
        return best;
    };

    auto peak_at = [&](std::size_t bin) {
        double peak = 0.0;
        for (std::size_t t = t_begin; t < t_end; ++t) peak = std::max(peak, band_rss(grid, bin, t));
        return peak;
    };

    const std::size_t bin1 = locate_ridge(f1);
    const std::size_t bin2 = locate_ridge(f2);
    const std::size_t bin_mid = locate_ridge((f1 + f2) / 2.0);

    CrossTermReport report;
    report.midpoint_freq = grid.freq_axis[bin_mid];
    report.auto_peak_1 = peak_at(bin1);
    report.auto_peak_2 = peak_at(bin2);
    report.cross_peak = peak_at(bin_mid);

    for (std::size_t t = t_begin; t < t_end; ++t)
        report.cross_energy += grid.at(bin_mid, t) * grid.at(bin_mid, t);

    // Dominant oscillation of the midpoint ridge along time.
    const std::size_t len = t_end - t_begin;
    std::vector<cplx> series(len);
    double mean = 0.0;
    for (std::size_t t = 0; t < len; ++t) mean += grid.at(bin_mid, t_begin + t);
    mean /= static_cast<double>(len);
    for (std::size_t t = 0; t < len; ++t) series[t] = grid.at(bin_mid, t_begin + t) - mean;
    auto spectrum = dft_forward(series, len);
    std::size_t dominant = 1;
    for (std::size_t k = 1; k <= len / 2; ++k)
        if (std::abs(spectrum[k]) > std::abs(spectrum[dominant])) dominant = k;
    const double frame_rate = 1.0 / (grid.time_axis[1] - grid.time_axis[0]);
    report.oscillation_rate = static_cast<double>(dominant) * frame_rate / static_cast<double>(len);

    report.cross_term_present =
        report.cross_peak > 0.1 * (0.5 * (report.auto_peak_1 + report.auto_peak_2));
    return report;
}

}  // namespace tfkit
