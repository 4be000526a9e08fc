// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#pragma once

#include <vector>

#include "tfkit/signal.hpp"
#include "tfkit/tfgrid.hpp"

namespace tfkit {

/// Instantaneous autocorrelation over (time, lag). Lags are discretized on
/// even steps: value(n, m) = x[n+m] conj(x[n-m]) samples the continuous
/// R(t, tau) at tau = 2m/fs, so the lag axis advances two sample periods per
/// step. Hermitian in the lag: value(n, -m) = conj(value(n, m)).
struct LagGrid {
    std::size_t n_time = 0;
    std::size_t n_lag = 0;               // 2*max_lag + 1
    std::vector<cplx> values;            // row-major [time][lag]
    std::vector<double> time_axis;       // seconds
    std::vector<double> lag_axis;        // seconds, symmetric about 0

    cplx& at(std::size_t t, std::size_t lag) { return values[t * n_lag + lag]; }
    cplx at(std::size_t t, std::size_t lag) const { return values[t * n_lag + lag]; }
};

/// Build the lag grid for lags |m| <= max_lag, zero where an index leaves the
/// signal. Callers normally pass an analytic signal.
LagGrid instantaneous_autocorrelation(const ComplexSignal& x, std::size_t max_lag);

/// Separable smoothing kernels: g low-passes along time, H along frequency.
/// Both symmetric, nonnegative, unit sum, odd length.
struct SmoothingKernel {
    std::vector<double> time_kernel;
    std::vector<double> freq_kernel;
};

/// Unit-sum symmetric Gaussian taps, sigma = length/6. Length is forced odd.
std::vector<double> gaussian_kernel(std::size_t length);

/// Default smoothing for a WVD of the given grid dimensions: a time kernel of
/// roughly a tenth of the frames (sigma = length/6) to remove the oscillating
/// cross terms, and a 3-tap frequency kernel that broadens ridges without
/// flattening them.
SmoothingKernel default_smoothing_kernel(std::size_t n_time, std::size_t n_freq);

struct WvdOptions {
    bool upsample = true;        // 2x band-limited interpolation after the analytic step
    std::size_t max_lag = 0;     // 0 = auto (about a quarter of the working length)
    std::size_t nfft_lag = 0;    // 0 = auto (power of two >= 2*max_lag + 1)
};

/// Wigner-Ville distribution. The input is converted to its analytic signal,
/// upsampled 2x by default (the even-lag discretization would otherwise alias
/// content above fs/4), and each time column is the transform of the lag
/// products. Columns with full lag support are marked interior in the grid
/// metadata. Values are real with either sign; the imaginary residual is
/// verified below 1e-9 (relative to the grid peak) and discarded.
TFGrid wvd(const RealSignal& x, const WvdOptions& options = {});

/// Smoothed pseudo WVD: the WVD convolved with g along time and H along
/// frequency, symmetric boundary handling, axes unchanged. Unit-impulse
/// kernels reproduce the WVD bit for bit.
TFGrid spwvd(const RealSignal& x, const SmoothingKernel& kernel, const WvdOptions& options = {});

/// Smooth an existing WVD-family grid without recomputing it.
TFGrid smooth_grid(const TFGrid& grid, const SmoothingKernel& kernel);

/// Cross-term measurements for a two-component grid: the ridge nearest the
/// midpoint (f1+f2)/2, its peak against the two auto-term peaks, and the
/// dominant oscillation rate of the midpoint ridge along time. Peaks are
/// root-sum-square over the ridge bin and its two neighbours, so off-bin
/// components measure consistently.
struct CrossTermReport {
    double midpoint_freq = 0.0;     // Hz, located ridge
    double auto_peak_1 = 0.0;
    double auto_peak_2 = 0.0;
    double cross_peak = 0.0;
    double oscillation_rate = 0.0;  // 1/s
    double cross_energy = 0.0;      // sum over interior frames of squared ridge values
    bool cross_term_present = false;
};

CrossTermReport cross_term_report(const TFGrid& grid, double f1, double f2);

}  // namespace tfkit
