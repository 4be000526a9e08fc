// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include "tfkit/signal_io.hpp"

#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "tfkit/errors.hpp"

namespace tfkit {

namespace {

// All on-disk integers and floats are little-endian.
template <typename T>
T read_le(std::istream& in, const char* what) {
    std::array<unsigned char, sizeof(T)> raw;
    if (!in.read(reinterpret_cast<char*>(raw.data()), raw.size()))
        throw format_error(std::string("unexpected end of file while reading ") + what);
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(raw.begin(), raw.end());
    T value;
    std::memcpy(&value, raw.data(), sizeof(T));
    return value;
}

template <typename T>
void write_le(std::ostream& out, T value) {
    std::array<unsigned char, sizeof(T)> raw;
    std::memcpy(raw.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(raw.begin(), raw.end());
    out.write(reinterpret_cast<const char*>(raw.data()), raw.size());
}

std::array<char, 4> read_tag(std::istream& in, const char* what) {
    std::array<char, 4> tag;
    if (!in.read(tag.data(), 4))
        throw format_error(std::string("unexpected end of file while reading ") + what);
    return tag;
}

bool tag_is(const std::array<char, 4>& tag, const char* expect) {
    return std::memcmp(tag.data(), expect, 4) == 0;
}

RealSignal load_wav(std::istream& in) {
    if (!tag_is(read_tag(in, "RIFF header"), "RIFF")) throw format_error("not a RIFF file (offset 0)");
    read_le<std::uint32_t>(in, "RIFF size");
    if (!tag_is(read_tag(in, "WAVE tag"), "WAVE")) throw format_error("not a WAVE file (offset 8)");

    bool have_fmt = false;
    std::uint16_t channels = 0, bits = 0, format = 0;
    std::uint32_t rate = 0;

    while (true) {
        auto tag = read_tag(in, "chunk id");
        const std::uint32_t size = read_le<std::uint32_t>(in, "chunk size");
        if (tag_is(tag, "fmt ")) {
            if (size < 16) throw format_error("fmt chunk too short");
            format = read_le<std::uint16_t>(in, "audio format");
            channels = read_le<std::uint16_t>(in, "channel count");
            rate = read_le<std::uint32_t>(in, "sample rate");
            read_le<std::uint32_t>(in, "byte rate");
            read_le<std::uint16_t>(in, "block align");
            bits = read_le<std::uint16_t>(in, "bits per sample");
            in.ignore(size - 16);
            have_fmt = true;
        } else if (tag_is(tag, "data")) {
            if (!have_fmt) throw format_error("data chunk before fmt chunk");
            if (format != 1) throw format_error("unsupported WAV encoding (PCM only)");
            if (channels != 1) throw format_error("unsupported channel count (mono only)");
            if (bits != 16) throw format_error("unsupported bit depth (16-bit only)");
            const std::size_t count = size / 2;
            RealSignal out{std::vector<double>(count), static_cast<double>(rate)};
            for (std::size_t i = 0; i < count; ++i)
                out.samples[i] = static_cast<double>(read_le<std::int16_t>(in, "PCM sample")) / 32768.0;
            out.validate();
            return out;
        } else {
            // Skip unknown chunks (word-aligned).
            in.ignore(size + (size & 1));
            if (!in) throw format_error("unexpected end of file while skipping chunk");
        }
    }
}

void save_wav(const RealSignal& x, std::ostream& out) {
    const std::uint32_t data_bytes = static_cast<std::uint32_t>(x.size() * 2);
    const std::uint32_t rate = static_cast<std::uint32_t>(std::llround(x.sample_rate));
    out.write("RIFF", 4);
    write_le<std::uint32_t>(out, 36 + data_bytes);
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    write_le<std::uint32_t>(out, 16);
    write_le<std::uint16_t>(out, 1);  // PCM
    write_le<std::uint16_t>(out, 1);  // mono
    write_le<std::uint32_t>(out, rate);
    write_le<std::uint32_t>(out, rate * 2);
    write_le<std::uint16_t>(out, 2);
    write_le<std::uint16_t>(out, 16);
    out.write("data", 4);
    write_le<std::uint32_t>(out, data_bytes);
    for (const double v : x.samples) {
        const double clamped = std::min(1.0, std::max(-1.0, v));
        write_le<std::int16_t>(out, static_cast<std::int16_t>(std::llround(clamped * 32767.0)));
    }
}

RealSignal load_csv(std::istream& in, double sample_rate) {
    RealSignal out{{}, sample_rate};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // Strip trailing CR from Windows-style files.
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        double value = 0.0;
        const char* first = line.data() + begin;
        const char* last = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{}) {
            if (lineno == 1) continue;  // optional header line
            throw format_error("csv: cannot parse line " + std::to_string(lineno));
        }
        (void)ptr;
        out.samples.push_back(value);
    }
    if (out.samples.empty()) throw format_error("csv: no samples found");
    return out;
}

}  // namespace

RealSignal load_signal(const std::string& path, SignalFormat format, double sample_rate) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);

    switch (format) {
        case SignalFormat::wav_pcm16_mono:
            return load_wav(in);
        case SignalFormat::raw_f64: {
            if (sample_rate <= 0.0)
                throw std::invalid_argument("load_signal: raw_f64 requires a positive sample rate");
            RealSignal out{{}, sample_rate};
            in.seekg(0, std::ios::end);
            const auto bytes = static_cast<std::size_t>(in.tellg());
            in.seekg(0);
            if (bytes % 8 != 0) throw format_error("raw_f64: size is not a multiple of 8 bytes");
            out.samples.resize(bytes / 8);
            for (auto& v : out.samples) v = read_le<double>(in, "raw sample");
            out.validate();
            return out;
        }
        case SignalFormat::csv:
            if (sample_rate <= 0.0)
                throw std::invalid_argument("load_signal: csv requires a positive sample rate");
            return load_csv(in, sample_rate);
    }
    throw std::invalid_argument("load_signal: unknown format");
}

void save_signal(const RealSignal& x, const std::string& path, SignalFormat format) {
    x.validate();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");

    switch (format) {
        case SignalFormat::wav_pcm16_mono:
            save_wav(x, out);
            break;
        case SignalFormat::raw_f64:
            for (const double v : x.samples) write_le<double>(out, v);
            break;
        case SignalFormat::csv: {
            std::ostringstream text;
            text.precision(17);
            text << "sample\n";
            for (const double v : x.samples) text << v << '\n';
            out << text.str();
            break;
        }
    }
    if (!out) throw io_error("write failed for " + path);
}

}  // namespace tfkit
