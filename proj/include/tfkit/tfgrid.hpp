// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#pragma once

#include <cstdint>
#include <vector>

#include "tfkit/signal.hpp"

namespace tfkit {

enum class TransformKind : std::uint8_t {
    stft = 0,
    gabor = 1,
    cwt = 2,
    stockwell = 3,
    wvd = 4,
    spwvd = 5,
};

enum class ScaleTag : std::uint8_t {
    linear = 0,
    decibel = 1,
};

/// Real-valued time-frequency grid, row-major with rows indexed by frequency
/// bin and columns by time frame. Spectrogram-family values are nonnegative;
/// WVD-family values may be negative.
struct TFGrid {
    std::size_t n_freq = 0;
    std::size_t n_time = 0;
    std::vector<double> values;     // n_freq * n_time, row-major
    std::vector<double> freq_axis;  // Hz, strictly increasing
    std::vector<double> time_axis;  // seconds, strictly increasing
    TransformKind kind = TransformKind::stft;
    ScaleTag scale = ScaleTag::linear;

    // In-memory hints; not part of the serialized format.
    bool log_freq_hint = false;       // wavelet grids prefer log-frequency display
    bool signed_values = false;       // WVD family
    std::size_t interior_begin = 0;   // [begin, end): frames with full lag support
    std::size_t interior_end = 0;

    double& at(std::size_t f, std::size_t t) { return values[f * n_time + t]; }
    double at(std::size_t f, std::size_t t) const { return values[f * n_time + t]; }
};

/// Complex time-frequency array shared by the linear transforms before the
/// squared-magnitude step. Same layout as TFGrid.
struct ComplexGrid {
    std::size_t n_freq = 0;
    std::size_t n_time = 0;
    std::vector<cplx> values;
    std::vector<double> freq_axis;
    std::vector<double> time_axis;

    cplx& at(std::size_t f, std::size_t t) { return values[f * n_time + t]; }
    cplx at(std::size_t f, std::size_t t) const { return values[f * n_time + t]; }
};

/// Convert a linear grid to dB relative to its own maximum magnitude, clipped
/// at `floor_db`. Signed grids convert their magnitudes.
TFGrid to_db(const TFGrid& grid, double floor_db = -120.0);

}  // namespace tfkit
