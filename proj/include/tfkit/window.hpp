// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#pragma once

#include <cstddef>
#include <vector>

namespace tfkit {

enum class WindowKind {
    rectangular,
    hann,
    gaussian,
};

/// Finite tapering sequence. Gaussian windows carry their width parameter
/// alpha (1/s^2); coefficients are exp(-alpha t^2) with t in seconds measured
/// from the window center, so an odd-length gaussian peaks at exactly 1.
struct Window {
    WindowKind kind = WindowKind::rectangular;
    std::vector<double> coefficients;
    double alpha = 0.0;        // 1/s^2, gaussian only
    double sample_rate = 0.0;  // Hz used to place the taps in seconds

    std::size_t size() const { return coefficients.size(); }
};

/// Build a window of the given length. Gaussian requires alpha > 0 and a
/// positive sample rate; hann and rectangular ignore both.
Window make_window(WindowKind kind, std::size_t length, double alpha = 0.0, double sample_rate = 0.0);

/// Gaussian window from alpha alone, truncated at +/-4 sigma with
/// sigma^2 = 1/(2 alpha); always odd length, no renormalization. This is the
/// window the Gabor transform uses.
Window make_gaussian_window(double alpha, double sample_rate);

/// Product of RMS duration and RMS bandwidth of the window, dimensionless.
/// The bandwidth side is measured on a finely zero-padded two-sided spectrum.
/// Bounded below by 1/(4 pi); a Gaussian attains the bound.
double time_bandwidth_product(const Window& w, double sample_rate);

}  // namespace tfkit
