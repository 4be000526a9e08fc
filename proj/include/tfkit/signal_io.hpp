// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#pragma once

#include <string>

#include "tfkit/signal.hpp"

namespace tfkit {

enum class SignalFormat {
    wav_pcm16_mono,  // RIFF/WAVE, PCM, 16-bit, mono
    raw_f64,         // little-endian 64-bit floats, no header
    csv,             // one sample per line, optional header line
};

/// Read a signal file. WAV carries its own sample rate; raw_f64 and csv take
/// it from `sample_rate`. PCM samples are normalized to [-1, 1) by 1/32768.
RealSignal load_signal(const std::string& path, SignalFormat format, double sample_rate = 0.0);

/// Write a signal file in the given format. WAV output clamps to [-1, 1] and
/// quantizes to 16-bit; raw_f64 is bit-exact.
void save_signal(const RealSignal& x, const std::string& path, SignalFormat format);

}  // namespace tfkit
