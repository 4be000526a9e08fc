// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tfkit/tfgrid.hpp"

namespace tfkit {

enum class Colormap {
    viridis,
    grayscale,
};

enum class Normalize {
    grid_max,  // scale by the grid's own maximum
    absolute,  // values are already normalized; clamp only
};

struct RenderSpec {
    Colormap colormap = Colormap::viridis;
    double db_floor = -120.0;               // dB grids map [floor, 0] onto the colormap
    Normalize normalize = Normalize::grid_max;
    bool log_freq_axis = false;
    std::size_t image_width = 512;
    std::size_t image_height = 512;
};

struct Image {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> rgb;  // 3 bytes per pixel, row-major from the top
};

/// Rasterize a grid: rows map to descending frequency, box-averaged when a
/// pixel covers several cells and nearest-neighbor when upscaling. Signed
/// linear grids are mapped symmetrically about zero. Deterministic for fixed
/// inputs.
Image render_image(const TFGrid& grid, const RenderSpec& spec);

/// Render and write a binary PPM (P6).
void render(const TFGrid& grid, const RenderSpec& spec, const std::string& path);

/// Colormap lookup for a normalized value in [0, 1].
std::array<std::uint8_t, 3> colormap_lookup(Colormap map, double u);

}  // namespace tfkit
