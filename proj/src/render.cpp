// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include "tfkit/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "tfkit/errors.hpp"

namespace tfkit {

namespace {

// Eleven evenly spaced anchors of the familiar dark-violet-to-yellow ramp.
constexpr std::array<std::array<double, 3>, 11> kViridisAnchors = {{
    {0.267, 0.005, 0.329},
    {0.283, 0.141, 0.458},
    {0.243, 0.290, 0.539},
    {0.192, 0.408, 0.557},
    {0.149, 0.510, 0.557},
    {0.122, 0.620, 0.537},
    {0.208, 0.718, 0.475},
    {0.427, 0.804, 0.349},
    {0.706, 0.871, 0.173},
    {0.874, 0.890, 0.094},
    {0.993, 0.906, 0.144},
}};

double clamp01(double u) { return std::min(1.0, std::max(0.0, u)); }

}  // namespace

std::array<std::uint8_t, 3> colormap_lookup(Colormap map, double u) {
    u = clamp01(u);
    if (map == Colormap::grayscale) {
        const auto g = static_cast<std::uint8_t>(std::lround(u * 255.0));
        return {g, g, g};
    }
    const double pos = u * static_cast<double>(kViridisAnchors.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, kViridisAnchors.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    std::array<std::uint8_t, 3> rgb;
    for (std::size_t c = 0; c < 3; ++c) {
        const double v = kViridisAnchors[lo][c] * (1.0 - frac) + kViridisAnchors[hi][c] * frac;
        rgb[c] = static_cast<std::uint8_t>(std::lround(clamp01(v) * 255.0));
    }
    return rgb;
}

namespace {

// Normalized field in [0, 1] per the grid's scale and sign conventions.
std::vector<double> normalized_field(const TFGrid& grid, const RenderSpec& spec) {
    std::vector<double> u(grid.values.size());
    if (grid.scale == ScaleTag::decibel) {
        const double floor_db = spec.db_floor;
        for (std::size_t i = 0; i < u.size(); ++i)
            u[i] = clamp01((grid.values[i] - floor_db) / (0.0 - floor_db));
        return u;
    }
    bool has_negative = false;
    double peak = 0.0;
    for (const double v : grid.values) {
        has_negative |= v < 0.0;
        peak = std::max(peak, std::abs(v));
    }
    if (spec.normalize == Normalize::absolute) peak = 1.0;
    if (peak == 0.0) peak = 1.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        // Signed grids sit on a symmetric ramp with zero at mid-scale.
        u[i] = has_negative ? clamp01(0.5 + 0.5 * grid.values[i] / peak)
                            : clamp01(grid.values[i] / peak);
    }
    return u;
}

// For every output pixel index, the half-open source interval it covers on a
// monotonically increasing position axis; empty intervals resolve to the
// nearest source cell.
std::vector<std::pair<std::size_t, std::size_t>> bin_ranges(const std::vector<double>& pos,
                                                            std::size_t out_size, bool descending) {
    const double lo = pos.front(), hi = pos.back();
    const double span = hi > lo ? hi - lo : 1.0;
    std::vector<std::pair<std::size_t, std::size_t>> ranges(out_size);
    for (std::size_t p = 0; p < out_size; ++p) {
        const std::size_t slot = descending ? out_size - 1 - p : p;
        const double a = lo + span * static_cast<double>(slot) / static_cast<double>(out_size);
        const double b = lo + span * static_cast<double>(slot + 1) / static_cast<double>(out_size);
        std::size_t first = pos.size(), last = 0;
        for (std::size_t i = 0; i < pos.size(); ++i) {
            if (pos[i] >= a && (pos[i] < b || (slot + 1 == out_size && pos[i] <= hi))) {
                first = std::min(first, i);
                last = std::max(last, i);
            }
        }
        if (first == pos.size()) {
            // No source cell inside: nearest to the interval center.
            const double center = 0.5 * (a + b);
            std::size_t best = 0;
            for (std::size_t i = 1; i < pos.size(); ++i)
                if (std::abs(pos[i] - center) < std::abs(pos[best] - center)) best = i;
            first = last = best;
        }
        ranges[p] = {first, last + 1};
    }
    return ranges;
}

}  // namespace

Image render_image(const TFGrid& grid, const RenderSpec& spec) {
    if (spec.image_width < 1 || spec.image_height < 1)
        throw std::invalid_argument("render: image dimensions must be >= 1");
    if (spec.db_floor >= 0.0) throw std::invalid_argument("render: db_floor must be negative");
    for (const double v : grid.values)
        if (!std::isfinite(v)) throw std::invalid_argument("render: grid holds non-finite values");
    if (grid.n_freq == 0 || grid.n_time == 0)
        throw std::invalid_argument("render: empty grid");

    const auto field = normalized_field(grid, spec);

    std::vector<double> freq_pos(grid.freq_axis);
    if (spec.log_freq_axis) {
        double smallest = 0.0;
        for (const double f : grid.freq_axis)
            if (f > 0.0) {
                smallest = f;
                break;
            }
        if (smallest > 0.0)
            for (auto& f : freq_pos) f = std::log2(std::max(f, smallest / 2.0));
    }

    // Pixel row 0 is the top of the image and the highest frequency.
    const auto rows = bin_ranges(freq_pos, spec.image_height, true);
    const auto cols = bin_ranges(grid.time_axis, spec.image_width, false);

    Image img;
    img.width = spec.image_width;
    img.height = spec.image_height;
    img.rgb.resize(3 * img.width * img.height);
    for (std::size_t p = 0; p < img.height; ++p) {
        for (std::size_t q = 0; q < img.width; ++q) {
            double acc = 0.0;
            std::size_t count = 0;
            for (std::size_t r = rows[p].first; r < rows[p].second; ++r)
                for (std::size_t c = cols[q].first; c < cols[q].second; ++c) {
                    acc += field[r * grid.n_time + c];
                    ++count;
                }
            const auto rgb = colormap_lookup(spec.colormap, acc / static_cast<double>(count));
            const std::size_t base = 3 * (p * img.width + q);
            img.rgb[base] = rgb[0];
            img.rgb[base + 1] = rgb[1];
            img.rgb[base + 2] = rgb[2];
        }
    }
    return img;
}

void render(const TFGrid& grid, const RenderSpec& spec, const std::string& path) {
    const Image img = render_image(grid, spec);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << "P6\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.rgb.data()),
              static_cast<std::streamsize>(img.rgb.size()));
    if (!out) throw io_error("write failed for " + path);
}

}  // namespace tfkit
