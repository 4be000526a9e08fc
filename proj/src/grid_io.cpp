// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include "tfkit/grid_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "tfkit/errors.hpp"

namespace tfkit {

namespace {

constexpr char kMagic[4] = {'T', 'F', 'G', '1'};

template <typename T>
void put_le(std::ostream& out, T value) {
    std::array<unsigned char, sizeof(T)> raw;
    std::memcpy(raw.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(raw.begin(), raw.end());
    out.write(reinterpret_cast<const char*>(raw.data()), raw.size());
}

template <typename T>
T get_le(std::istream& in, std::size_t offset, const char* what) {
    std::array<unsigned char, sizeof(T)> raw;
    if (!in.read(reinterpret_cast<char*>(raw.data()), raw.size()))
        throw format_error("tfgrid: truncated while reading " + std::string(what) + " at offset " +
                           std::to_string(offset));
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(raw.begin(), raw.end());
    T value;
    std::memcpy(&value, raw.data(), sizeof(T));
    return value;
}

void write_tfgrid(const TFGrid& grid, std::ostream& out) {
    out.write(kMagic, 4);
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(grid.n_freq));
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(grid.n_time));
    for (const double v : grid.freq_axis) put_le(out, v);
    for (const double v : grid.time_axis) put_le(out, v);
    for (const double v : grid.values) put_le(out, v);
    put_le<std::uint8_t>(out, static_cast<std::uint8_t>(grid.kind));
    put_le<std::uint8_t>(out, static_cast<std::uint8_t>(grid.scale));
}

void write_csv(const TFGrid& grid, std::ostream& out) {
    std::ostringstream text;
    text.precision(17);
    text << "time_s";
    for (const double f : grid.freq_axis) text << ',' << f;
    text << '\n';
    for (std::size_t t = 0; t < grid.n_time; ++t) {
        text << grid.time_axis[t];
        for (std::size_t k = 0; k < grid.n_freq; ++k) text << ',' << grid.at(k, t);
        text << '\n';
    }
    out << text.str();
}

}  // namespace

void write_grid(const TFGrid& grid, const std::string& path, GridFileFormat format) {
    if (grid.values.size() != grid.n_freq * grid.n_time ||
        grid.freq_axis.size() != grid.n_freq || grid.time_axis.size() != grid.n_time)
        throw std::invalid_argument("write_grid: inconsistent grid dimensions");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    if (format == GridFileFormat::tfgrid)
        write_tfgrid(grid, out);
    else
        write_csv(grid, out);
    if (!out) throw io_error("write failed for " + path);
}

TFGrid read_grid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);

    char magic[4];
    if (!in.read(magic, 4)) throw format_error("tfgrid: truncated magic at offset 0");
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw format_error("tfgrid: bad magic at offset 0 (expected \"TFG1\")");

    TFGrid grid;
    std::size_t offset = 4;
    grid.n_freq = get_le<std::uint32_t>(in, offset, "n_freq");
    offset += 4;
    grid.n_time = get_le<std::uint32_t>(in, offset, "n_time");
    offset += 4;

    grid.freq_axis.resize(grid.n_freq);
    for (auto& v : grid.freq_axis) {
        v = get_le<double>(in, offset, "frequency axis");
        offset += 8;
    }
    grid.time_axis.resize(grid.n_time);
    for (auto& v : grid.time_axis) {
        v = get_le<double>(in, offset, "time axis");
        offset += 8;
    }
    grid.values.resize(grid.n_freq * grid.n_time);
    for (auto& v : grid.values) {
        v = get_le<double>(in, offset, "values");
        offset += 8;
    }
    grid.kind = static_cast<TransformKind>(get_le<std::uint8_t>(in, offset, "transform kind"));
    offset += 1;
    grid.scale = static_cast<ScaleTag>(get_le<std::uint8_t>(in, offset, "scale tag"));

    grid.signed_values = grid.kind == TransformKind::wvd || grid.kind == TransformKind::spwvd;
    grid.log_freq_hint = grid.kind == TransformKind::cwt;
    return grid;
}

}  // namespace tfkit
