// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include "tfkit/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace tfkit {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_band(double f, double fs, const char* what) {
    if (f < 0.0 || f > fs / 2.0)
        throw std::invalid_argument(std::string("synthesize: ") + what + " outside [0, fs/2]");
}

void validate(const SignalSpec& s) {
    if (s.duration <= 0.0) throw std::invalid_argument("synthesize: duration must be positive");
    if (s.sample_rate <= 0.0) throw std::invalid_argument("synthesize: sample_rate must be positive");
    switch (s.kind) {
        case SignalKind::linear_chirp:
            check_band(s.f_start, s.sample_rate, "f_start");
            check_band(s.f_end, s.sample_rate, "f_end");
            break;
        case SignalKind::freq_step: {
            check_band(s.f_start, s.sample_rate, "f_start");
            double prev = 0.0;
            bool first = true;
            for (const auto& step : s.steps) {
                if (!first && step.time <= prev)
                    throw std::invalid_argument("synthesize: step times must be strictly increasing");
                if (step.time < 0.0 || step.time > s.duration)
                    throw std::invalid_argument("synthesize: step time outside [0, duration]");
                check_band(step.frequency, s.sample_rate, "step frequency");
                prev = step.time;
                first = false;
            }
            break;
        }
        case SignalKind::gaussian_pulse:
        case SignalKind::sine_burst:
            check_band(s.f_start, s.sample_rate, "f_start");
            if (s.width <= 0.0) throw std::invalid_argument("synthesize: width must be positive");
            break;
        case SignalKind::tone:
            check_band(s.f_start, s.sample_rate, "f_start");
            break;
        case SignalKind::white_noise:
            break;
    }
}

}  // namespace

RealSignal synthesize(const SignalSpec& spec) {
    validate(spec);
    const double fs = spec.sample_rate;
    const std::size_t n = static_cast<std::size_t>(std::llround(spec.duration * fs));
    RealSignal out{std::vector<double>(n, 0.0), fs};

    switch (spec.kind) {
        case SignalKind::tone: {
            for (std::size_t i = 0; i < n; ++i) {
                const double t = static_cast<double>(i) / fs;
                out.samples[i] = spec.amplitude * std::cos(two_pi * spec.f_start * t);
            }
            break;
        }
        case SignalKind::linear_chirp: {
            const double rate = (spec.f_end - spec.f_start) / (2.0 * spec.duration);
            for (std::size_t i = 0; i < n; ++i) {
                const double t = static_cast<double>(i) / fs;
                out.samples[i] = spec.amplitude * std::cos(two_pi * (spec.f_start * t + rate * t * t));
            }
            break;
        }
        case SignalKind::gaussian_pulse: {
            const double inv_two_w2 = 1.0 / (2.0 * spec.width * spec.width);
            for (std::size_t i = 0; i < n; ++i) {
                const double t = static_cast<double>(i) / fs;
                const double d = t - spec.center_time;
                out.samples[i] = spec.amplitude * std::exp(-d * d * inv_two_w2) *
                                 std::cos(two_pi * spec.f_start * d);
            }
            break;
        }
        case SignalKind::sine_burst: {
            const double gate_lo = spec.center_time - spec.width / 2.0;
            const double gate_hi = spec.center_time + spec.width / 2.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double t = static_cast<double>(i) / fs;
                if (t < gate_lo || t > gate_hi) continue;
                out.samples[i] = spec.amplitude * std::cos(two_pi * spec.f_start * t);
            }
            break;
        }
        case SignalKind::freq_step: {
            // Exact per-segment linear phase, accumulated at each boundary so
            // the join is phase-continuous.
            double seg_start = 0.0;
            double seg_freq = spec.f_start;
            double seg_phase = 0.0;
            std::size_t next = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const double t = static_cast<double>(i) / fs;
                while (next < spec.steps.size() && t >= spec.steps[next].time) {
                    seg_phase += two_pi * seg_freq * (spec.steps[next].time - seg_start);
                    seg_start = spec.steps[next].time;
                    seg_freq = spec.steps[next].frequency;
                    ++next;
                }
                out.samples[i] = spec.amplitude * std::cos(seg_phase + two_pi * seg_freq * (t - seg_start));
            }
            break;
        }
        case SignalKind::white_noise: {
            // Raw generator words mapped to [-1, 1); bit-exact reproducible
            // for a given seed, independent of library distribution internals.
            std::mt19937_64 rng(spec.seed);
            for (std::size_t i = 0; i < n; ++i) {
                const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                out.samples[i] = spec.amplitude * (2.0 * u - 1.0);
            }
            break;
        }
    }
    return out;
}

RealSignal mix(const std::vector<RealSignal>& signals) {
    if (signals.empty()) throw std::invalid_argument("mix: need at least one signal");
    const double fs = signals.front().sample_rate;
    std::size_t longest = 0;
    for (const auto& s : signals) {
        s.validate();
        if (s.sample_rate != fs) throw std::invalid_argument("mix: sample rates do not match");
        longest = std::max(longest, s.size());
    }
    RealSignal out{std::vector<double>(longest, 0.0), fs};
    for (const auto& s : signals)
        for (std::size_t i = 0; i < s.size(); ++i) out.samples[i] += s.samples[i];
    return out;
}

}  // namespace tfkit
