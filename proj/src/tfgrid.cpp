// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include "tfkit/tfgrid.hpp"

#include <cmath>
#include <stdexcept>

namespace tfkit {

TFGrid to_db(const TFGrid& grid, double floor_db) {
    if (grid.scale == ScaleTag::decibel)
        throw std::invalid_argument("to_db: grid is already in dB");
    if (floor_db >= 0.0) throw std::invalid_argument("to_db: floor must be negative");

    double peak = 0.0;
    for (const double v : grid.values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) throw std::invalid_argument("to_db: all-zero grid is degenerate");

    TFGrid out = grid;
    out.scale = ScaleTag::decibel;
    for (auto& v : out.values) {
        const double mag = std::abs(v);
        v = mag == 0.0 ? floor_db : std::max(10.0 * std::log10(mag / peak), floor_db);
    }
    return out;
}

}  // namespace tfkit
