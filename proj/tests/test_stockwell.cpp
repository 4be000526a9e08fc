// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tfkit/fft.hpp"
#include "tfkit/stockwell.hpp"
#include "tfkit/synth.hpp"

using tfkit::SignalKind;
using tfkit::SignalSpec;

namespace {

tfkit::RealSignal tone(double f0, double fs, double duration) {
    SignalSpec spec;
    spec.kind = SignalKind::tone;
    spec.f_start = f0;
    spec.sample_rate = fs;
    spec.duration = duration;
    return tfkit::synthesize(spec);
}

}  // namespace

TEST_CASE("time average of every nonzero row equals the Fourier coefficient") {
    const double fs = 500.0;
    tfkit::RealSignal x{oracle::random_real(250, 33), fs};
    auto g = tfkit::stockwell(x, 10.0, 200.0);
    auto spectrum = tfkit::dft_forward(tfkit::to_complex(x), x.size());

    for (std::size_t r = 0; r < g.n_freq; ++r) {
        tfkit::cplx mean(0.0, 0.0);
        for (std::size_t t = 0; t < g.n_time; ++t) mean += g.at(r, t);
        mean /= static_cast<double>(g.n_time);
        const auto bin = static_cast<std::size_t>(
            std::llround(g.freq_axis[r] * static_cast<double>(x.size()) / fs));
        CHECK(std::abs(mean - spectrum[bin]) < 1e-9);
    }
}

TEST_CASE("f = 0 row of a constant signal is the constant") {
    tfkit::RealSignal x{std::vector<double>(128, 3.25), 128.0};
    auto g = tfkit::stockwell(x, 0.0, 8.0);
    CHECK(g.freq_axis.front() == 0.0);
    for (std::size_t t = 0; t < g.n_time; ++t)
        CHECK(g.at(0, t) == tfkit::cplx(3.25, 0.0));
}

TEST_CASE("invalid analysis bands are rejected") {
    auto x = tone(50.0, 500.0, 0.5);
    CHECK_THROWS_AS(tfkit::stockwell(x, -1.0, 100.0), std::invalid_argument);
    CHECK_THROWS_AS(tfkit::stockwell(x, 100.0, 100.0), std::invalid_argument);
    CHECK_THROWS_AS(tfkit::stockwell(x, 10.0, 400.0), std::invalid_argument);
}

TEST_CASE("ridge frequency width doubles with the analyzed frequency") {
    const double fs = 1024.0;
    auto x = tfkit::mix({tone(64.0, fs, 1.0), tone(128.0, fs, 1.0)});
    auto g = tfkit::stockwell(x, 24.0, 256.0);

    std::vector<double> profile(g.n_freq);
    for (std::size_t r = 0; r < g.n_freq; ++r) profile[r] = std::abs(g.at(r, g.n_time / 2));
    const std::size_t split = static_cast<std::size_t>(96.0 - 24.0);  // midpoint between tones
    std::vector<double> low(profile.begin(), profile.begin() + split);
    std::vector<double> high(profile.begin() + split, profile.end());
    const double w_low = oracle::half_power_width(low);
    const double w_high = oracle::half_power_width(high);
    CHECK(w_high / w_low == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("impulse response time width scales as 1/f") {
    const double fs = 1024.0;
    tfkit::RealSignal x{std::vector<double>(1024, 0.0), fs};
    x.samples[512] = 1.0;
    auto g = tfkit::stockwell(x, 40.0, 400.0);

    // sigma_t measured from the squared-magnitude profile; |ST| has
    // sigma 1/f, so |ST|^2 has sigma 1/(sqrt(2) f).
    auto sigma_at = [&](double f_target) {
        std::size_t row = 0;
        for (std::size_t r = 0; r < g.n_freq; ++r)
            if (std::abs(g.freq_axis[r] - f_target) < std::abs(g.freq_axis[row] - f_target)) row = r;
        std::vector<double> power(g.n_time);
        for (std::size_t t = 0; t < g.n_time; ++t) power[t] = std::norm(g.at(row, t));
        return oracle::rms_spread(power) / fs;
    };
    for (double f : {50.0, 100.0, 200.0, 400.0}) {
        const double expected = 1.0 / (std::numbers::sqrt2 * f);
        CHECK(sigma_at(f) == doctest::Approx(expected).epsilon(0.05));
    }
}

TEST_CASE("zero-padded variant keeps the time span and refines the bins") {
    const double fs = 256.0;
    auto x = tone(32.0, fs, 1.0);
    auto circ = tfkit::stockwell(x, 16.0, 64.0);
    auto padded = tfkit::stockwell(x, 16.0, 64.0, tfkit::BoundaryMode::zero_pad);
    CHECK(padded.n_time == circ.n_time);
    CHECK(padded.n_freq == 2 * circ.n_freq - 1);
    CHECK(padded.freq_axis[1] - padded.freq_axis[0] ==
          doctest::Approx(0.5 * (circ.freq_axis[1] - circ.freq_axis[0])));
}
