// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#pragma once

#include <vector>

#include "tfkit/signal.hpp"
#include "tfkit/tfgrid.hpp"

namespace tfkit {

/// Morlet mother wavelet exp(-alpha t^2) exp(i 2 pi f_c t): a complex sine at
/// the center frequency under a Gaussian envelope.
struct MorletParams {
    double f_c = 1.0;    // Hz
    double alpha = 1.0;  // 1/s^2

    void validate() const {
        if (f_c <= 0.0) throw std::invalid_argument("MorletParams: f_c must be positive");
        if (alpha <= 0.0) throw std::invalid_argument("MorletParams: alpha must be positive");
    }
};

/// Geometric ladder of dilation factors. Scales are stored in order of
/// ascending mapped frequency f = f_c/a, i.e. strictly decreasing scale.
struct ScaleGrid {
    std::vector<double> scales;
    int voices_per_octave = 12;
    double f_min = 0.0;  // Hz
    double f_max = 0.0;  // Hz
};

/// Build the geometric grid covering [f_min, f_max] with the given number of
/// voices per octave under the f = f_c/a mapping.
ScaleGrid make_scale_grid(const MorletParams& p, double f_min, double f_max,
                          int voices_per_octave = 12);

/// Samples of the dilated wavelet Psi(t/a) over t in +/-4 sigma a, where
/// sigma^2 = 1/(2 alpha). The center sample (t = 0) is exactly 1.
std::vector<cplx> morlet_wavelet(const MorletParams& p, double scale, double sample_rate);

enum class BoundaryMode {
    circular,  // periodic correlation; keeps spectral identities exact
    zero_pad,  // linear correlation against a zero-extended signal
};

struct CwtResult {
    ComplexGrid grid;           // rows ordered by ascending frequency
    std::vector<double> scales; // per-row dilation factors
    bool truncated = false;     // a wavelet support was clamped to 4x signal length
};

/// Continuous wavelet transform: row for scale a holds (1/sqrt(a)) times the
/// correlation of x with the conjugated dilated wavelet at every integer
/// shift. Computed per scale by FFT correlation; rows are independent and run
/// in parallel.
CwtResult cwt(const RealSignal& x, const MorletParams& p, const ScaleGrid& grid,
              BoundaryMode boundary = BoundaryMode::circular);

/// Squared magnitudes of a CWT with the scale-to-frequency axis attached.
TFGrid scalogram(const CwtResult& transform);

}  // namespace tfkit
