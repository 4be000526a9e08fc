// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "tfkit/errors.hpp"
#include "tfkit/grid_io.hpp"
#include "tfkit/render.hpp"
#include "tfkit/tfgrid.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("tfkit_grid_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    std::string file(const char* name) const { return (path / name).string(); }
};

tfkit::TFGrid random_grid(std::size_t nf, std::size_t nt, std::uint64_t seed) {
    tfkit::TFGrid g;
    g.n_freq = nf;
    g.n_time = nt;
    g.values = oracle::random_real(nf * nt, seed);
    g.freq_axis.resize(nf);
    g.time_axis.resize(nt);
    for (std::size_t i = 0; i < nf; ++i) g.freq_axis[i] = 10.0 * static_cast<double>(i + 1);
    for (std::size_t i = 0; i < nt; ++i) g.time_axis[i] = 0.01 * static_cast<double>(i);
    g.kind = tfkit::TransformKind::stft;
    return g;
}

bool grids_bit_identical(const tfkit::TFGrid& a, const tfkit::TFGrid& b) {
    return a.n_freq == b.n_freq && a.n_time == b.n_time && a.values == b.values &&
           a.freq_axis == b.freq_axis && a.time_axis == b.time_axis && a.kind == b.kind &&
           a.scale == b.scale;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("to_db maps the peak to zero and scales decades") {
    auto g = random_grid(4, 4, 1);
    for (auto& v : g.values) v = 0.0;
    g.values[0] = 100.0;
    g.values[1] = 1.0;    // peak/100
    g.values[2] = 0.0;    // clipped to the floor

    auto db = tfkit::to_db(g, -120.0);
    CHECK(db.scale == tfkit::ScaleTag::decibel);
    CHECK(db.values[0] == 0.0);
    CHECK(db.values[1] == doctest::Approx(-20.0).epsilon(1e-12));
    CHECK(db.values[2] == -120.0);
}

TEST_CASE("to_db on an all-zero grid is a degenerate-grid error") {
    auto g = random_grid(3, 3, 2);
    for (auto& v : g.values) v = 0.0;
    CHECK_THROWS_AS(tfkit::to_db(g), std::invalid_argument);
}

TEST_CASE("to_db of signed grids works on magnitudes") {
    auto g = random_grid(2, 2, 3);
    g.values = {-8.0, 4.0, 2.0, -1.0};
    g.signed_values = true;
    auto db = tfkit::to_db(g, -60.0);
    CHECK(db.values[0] == 0.0);  // |-8| is the peak
    CHECK(db.values[1] == doctest::Approx(10.0 * std::log10(4.0 / 8.0)));
}

TEST_CASE("tfgrid files roundtrip bit-exactly") {
    TempDir dir;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto g = random_grid(3 + seed % 5, 4 + seed % 7, seed);
        g.kind = static_cast<tfkit::TransformKind>(seed % 6);
        const auto path = dir.file("grid.tfg");
        tfkit::write_grid(g, path);
        auto back = tfkit::read_grid(path);
        CHECK(grids_bit_identical(g, back));
    }
}

TEST_CASE("reading a file with wrong magic names the offset") {
    TempDir dir;
    const auto path = dir.file("bogus.tfg");
    std::ofstream(path, std::ios::binary).write("XXXX0000", 8);
    CHECK_THROWS_WITH_AS(tfkit::read_grid(path), "tfgrid: bad magic at offset 0 (expected \"TFG1\")",
                         tfkit::format_error);
}

TEST_CASE("truncated tfgrid names the failing offset") {
    TempDir dir;
    auto g = random_grid(4, 4, 9);
    const auto full = dir.file("full.tfg");
    tfkit::write_grid(g, full);
    auto bytes = slurp(full);
    const auto cut = dir.file("cut.tfg");
    std::ofstream(cut, std::ios::binary).write(bytes.data(), 20);  // inside the frequency axis
    try {
        tfkit::read_grid(cut);
        FAIL("expected format_error");
    } catch (const tfkit::format_error& e) {
        CHECK(std::string(e.what()).find("offset") != std::string::npos);
    }
}

TEST_CASE("csv export puts the frequency axis in the first row") {
    TempDir dir;
    auto g = random_grid(3, 2, 10);
    const auto path = dir.file("grid.csv");
    tfkit::write_grid(g, path, tfkit::GridFileFormat::csv);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "time_s,10,20,30");
    std::string row;
    std::size_t rows = 0;
    while (std::getline(in, row)) ++rows;
    CHECK(rows == g.n_time);
}

TEST_CASE("a 2x2 grid renders to its colormap corners") {
    tfkit::TFGrid g;
    g.n_freq = g.n_time = 2;
    g.values = {0.0, 1.0, 0.5, 0.25};
    g.freq_axis = {1.0, 2.0};
    g.time_axis = {0.0, 1.0};

    tfkit::RenderSpec spec;
    spec.image_width = spec.image_height = 2;
    spec.colormap = tfkit::Colormap::viridis;
    auto img = tfkit::render_image(g, spec);
    REQUIRE(img.rgb.size() == 12);

    // Top row is the high-frequency grid row.
    auto expect = [&](std::size_t pixel, double u) {
        auto rgb = tfkit::colormap_lookup(tfkit::Colormap::viridis, u);
        CHECK(img.rgb[3 * pixel] == rgb[0]);
        CHECK(img.rgb[3 * pixel + 1] == rgb[1]);
        CHECK(img.rgb[3 * pixel + 2] == rgb[2]);
    };
    expect(0, 0.5);
    expect(1, 0.25);
    expect(2, 0.0);
    expect(3, 1.0);
}

TEST_CASE("grayscale checkerboard renders black and white") {
    tfkit::TFGrid g;
    g.n_freq = g.n_time = 2;
    g.values = {0.0, 7.0, 7.0, 0.0};
    g.freq_axis = {1.0, 2.0};
    g.time_axis = {0.0, 1.0};
    tfkit::RenderSpec spec;
    spec.colormap = tfkit::Colormap::grayscale;
    spec.image_width = spec.image_height = 2;
    auto img = tfkit::render_image(g, spec);
    CHECK(img.rgb == std::vector<std::uint8_t>{255, 255, 255, 0, 0, 0, 0, 0, 0, 255, 255, 255});
}

TEST_CASE("rendering twice produces byte-identical files") {
    TempDir dir;
    auto g = random_grid(32, 48, 11);
    tfkit::RenderSpec spec;
    spec.image_width = 64;
    spec.image_height = 40;
    const auto a = dir.file("a.ppm");
    const auto b = dir.file("b.ppm");
    tfkit::render(g, spec, a);
    tfkit::render(g, spec, b);
    const auto bytes = slurp(a);
    CHECK(bytes == slurp(b));
    CHECK(bytes.substr(0, 3) == "P6\n");
}

TEST_CASE("signed linear grids render on a symmetric ramp") {
    tfkit::TFGrid g;
    g.n_freq = 1;
    g.n_time = 3;
    g.values = {-4.0, 0.0, 4.0};
    g.freq_axis = {1.0};
    g.time_axis = {0.0, 1.0, 2.0};
    g.signed_values = true;
    tfkit::RenderSpec spec;
    spec.colormap = tfkit::Colormap::grayscale;
    spec.image_width = 3;
    spec.image_height = 1;
    auto img = tfkit::render_image(g, spec);
    CHECK(img.rgb[0] == 0);
    CHECK(img.rgb[3] == 128);
    CHECK(img.rgb[6] == 255);
}

TEST_CASE("non-finite grids and bad specs are rejected") {
    auto g = random_grid(2, 2, 12);
    tfkit::RenderSpec spec;
    spec.image_width = 0;
    CHECK_THROWS_AS(tfkit::render_image(g, spec), std::invalid_argument);
    spec.image_width = 8;
    g.values[0] = std::nan("");
    CHECK_THROWS_AS(tfkit::render_image(g, spec), std::invalid_argument);
}
