// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#pragma once

#include <cstdint>
#include <vector>

#include "tfkit/signal.hpp"

namespace tfkit {

enum class SignalKind {
    tone,
    linear_chirp,
    gaussian_pulse,
    freq_step,
    sine_burst,
    white_noise,
};

/// One frequency-step boundary: at `time` the carrier switches to `frequency`.
struct StepPoint {
    double time = 0.0;       // seconds
    double frequency = 0.0;  // Hz
};

/// Parameterization of the synthetic test signals: tones, sweeps, pulses,
/// frequency steps, short sine bursts, and seeded noise.
struct SignalSpec {
    SignalKind kind = SignalKind::tone;
    double f_start = 0.0;            // Hz
    double f_end = 0.0;              // Hz, linear_chirp only
    double center_time = 0.0;        // seconds, gaussian_pulse / sine_burst
    double width = 0.0;              // seconds; RMS width (pulse) or gate length (burst)
    std::vector<StepPoint> steps;    // freq_step only, strictly increasing times
    double amplitude = 1.0;
    double duration = 0.0;           // seconds
    double sample_rate = 0.0;        // Hz
    std::uint64_t seed = 0;          // white_noise only
};

/// Render the spec to samples. Deterministic: the same spec (seed included)
/// always produces bit-identical output. Frequency steps are phase-continuous.
RealSignal synthesize(const SignalSpec& spec);

/// Pointwise sum, zero-padded to the longest input. All inputs must share a
/// sample rate.
RealSignal mix(const std::vector<RealSignal>& signals);

}  // namespace tfkit
