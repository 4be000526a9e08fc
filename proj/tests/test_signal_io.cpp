// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "tfkit/errors.hpp"
#include "tfkit/signal_io.hpp"
#include "tfkit/synth.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("tfkit_io_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    std::string file(const char* name) const { return (path / name).string(); }
};

tfkit::RealSignal test_tone() {
    tfkit::SignalSpec spec;
    spec.kind = tfkit::SignalKind::tone;
    spec.f_start = 100.0;
    spec.duration = 0.25;
    spec.sample_rate = 8000.0;
    spec.amplitude = 0.5;
    return tfkit::synthesize(spec);
}

}  // namespace

TEST_CASE("raw_f64 roundtrip is bit-identical") {
    TempDir dir;
    auto x = test_tone();
    const auto path = dir.file("tone.f64");
    tfkit::save_signal(x, path, tfkit::SignalFormat::raw_f64);
    auto y = tfkit::load_signal(path, tfkit::SignalFormat::raw_f64, x.sample_rate);
    CHECK(y.samples == x.samples);
    CHECK(y.sample_rate == x.sample_rate);
}

TEST_CASE("wav roundtrip preserves rate and quantizes to 16 bits") {
    TempDir dir;
    auto x = test_tone();
    const auto path = dir.file("tone.wav");
    tfkit::save_signal(x, path, tfkit::SignalFormat::wav_pcm16_mono);
    auto y = tfkit::load_signal(path, tfkit::SignalFormat::wav_pcm16_mono);
    REQUIRE(y.size() == x.size());
    CHECK(y.sample_rate == x.sample_rate);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(std::abs(y.samples[i] - x.samples[i]) < 1.0 / 32768.0);
}

TEST_CASE("full-scale positive PCM reads back as 32767/32768") {
    TempDir dir;
    const auto path = dir.file("fullscale.wav");
    // Hand-rolled one-sample file with sample value 32767.
    std::ofstream out(path, std::ios::binary);
    auto u32 = [&out](std::uint32_t v) { out.write(reinterpret_cast<const char*>(&v), 4); };
    auto u16 = [&out](std::uint16_t v) { out.write(reinterpret_cast<const char*>(&v), 2); };
    out.write("RIFF", 4); u32(38); out.write("WAVE", 4);
    out.write("fmt ", 4); u32(16); u16(1); u16(1); u32(8000); u32(16000); u16(2); u16(16);
    out.write("data", 4); u32(2); u16(32767);
    out.close();

    auto y = tfkit::load_signal(path, tfkit::SignalFormat::wav_pcm16_mono);
    REQUIRE(y.size() == 1);
    CHECK(y.samples[0] == 32767.0 / 32768.0);
}

TEST_CASE("truncated WAV header is a format error") {
    TempDir dir;
    const auto path = dir.file("broken.wav");
    std::ofstream(path, std::ios::binary).write("RIFF\x10\x00", 6);
    CHECK_THROWS_AS(tfkit::load_signal(path, tfkit::SignalFormat::wav_pcm16_mono), tfkit::format_error);
}

TEST_CASE("stereo and non-PCM WAVs are rejected with a diagnostic") {
    TempDir dir;
    const auto path = dir.file("stereo.wav");
    std::ofstream out(path, std::ios::binary);
    auto u32 = [&out](std::uint32_t v) { out.write(reinterpret_cast<const char*>(&v), 4); };
    auto u16 = [&out](std::uint16_t v) { out.write(reinterpret_cast<const char*>(&v), 2); };
    out.write("RIFF", 4); u32(40); out.write("WAVE", 4);
    out.write("fmt ", 4); u32(16); u16(1); u16(2); u32(8000); u32(32000); u16(4); u16(16);
    out.write("data", 4); u32(4); u32(0);
    out.close();
    CHECK_THROWS_WITH_AS(tfkit::load_signal(path, tfkit::SignalFormat::wav_pcm16_mono),
                         "unsupported channel count (mono only)", tfkit::format_error);
}

TEST_CASE("csv roundtrip with header line") {
    TempDir dir;
    auto x = test_tone();
    const auto path = dir.file("tone.csv");
    tfkit::save_signal(x, path, tfkit::SignalFormat::csv);
    auto y = tfkit::load_signal(path, tfkit::SignalFormat::csv, x.sample_rate);
    REQUIRE(y.size() == x.size());
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(y.samples[i] == x.samples[i]);
}

TEST_CASE("raw and csv loads require a sample rate") {
    TempDir dir;
    auto x = test_tone();
    const auto path = dir.file("tone.f64");
    tfkit::save_signal(x, path, tfkit::SignalFormat::raw_f64);
    CHECK_THROWS_AS(tfkit::load_signal(path, tfkit::SignalFormat::raw_f64), std::invalid_argument);
}

TEST_CASE("missing file is an io error") {
    CHECK_THROWS_AS(tfkit::load_signal("/nonexistent/nope.wav", tfkit::SignalFormat::wav_pcm16_mono),
                    tfkit::io_error);
}
