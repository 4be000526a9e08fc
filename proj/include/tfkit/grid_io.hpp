// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#pragma once

#include <string>

#include "tfkit/tfgrid.hpp"

namespace tfkit {

enum class GridFileFormat {
    tfgrid,  // binary, bit-exact roundtrip
    csv,     // first row is the frequency axis header; export only
};

/// tfgrid layout, all little-endian:
///   "TFG1" | u32 n_freq | u32 n_time | f64 freq_axis[n_freq]
///   | f64 time_axis[n_time] | f64 values (row-major, frequency rows)
///   | u8 transform-kind | u8 scale tag
void write_grid(const TFGrid& grid, const std::string& path,
                GridFileFormat format = GridFileFormat::tfgrid);

/// Read a tfgrid file back; read(write(g)) is bit-exact.
TFGrid read_grid(const std::string& path);

}  // namespace tfkit
