// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tfkit/window.hpp"

using tfkit::WindowKind;

namespace {
constexpr double kLowerBound = 1.0 / (4.0 * std::numbers::pi);
}

TEST_CASE("rectangular window is all ones") {
    auto w = tfkit::make_window(WindowKind::rectangular, 4);
    CHECK(w.coefficients == std::vector<double>{1.0, 1.0, 1.0, 1.0});
}

TEST_CASE("gaussian center coefficient is exactly one") {
    auto w = tfkit::make_window(WindowKind::gaussian, 65, 100.0, 1000.0);
    CHECK(w.coefficients[32] == 1.0);
}

TEST_CASE("gaussian taps follow exp(-alpha t^2)") {
    // sigma of 10 samples at fs: alpha = 1/(2 sigma^2); value at +/-10 samples
    // is exp(-1/2).
    const double fs = 1000.0;
    const double sigma = 10.0 / fs;
    const double alpha = 1.0 / (2.0 * sigma * sigma);
    auto w = tfkit::make_window(WindowKind::gaussian, 81, alpha, fs);
    CHECK(w.coefficients[40] == 1.0);
    CHECK(w.coefficients[50] == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(w.coefficients[30] == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
}

TEST_CASE("gaussian window is symmetric about its center") {
    auto w = tfkit::make_window(WindowKind::gaussian, 33, 50.0, 500.0);
    for (std::size_t i = 0; i < w.size(); ++i)
        CHECK(w.coefficients[i] == doctest::Approx(w.coefficients[w.size() - 1 - i]).epsilon(1e-15));
}

TEST_CASE("hann endpoints vanish and midpoint is one") {
    auto w = tfkit::make_window(WindowKind::hann, 65);
    CHECK(w.coefficients.front() == 0.0);
    CHECK(w.coefficients.back() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(w.coefficients[32] == doctest::Approx(1.0));
}

TEST_CASE("gaussian without alpha is a missing-parameter error") {
    CHECK_THROWS_AS(tfkit::make_window(WindowKind::gaussian, 16), std::invalid_argument);
    CHECK_THROWS_AS(tfkit::make_window(WindowKind::rectangular, 0), std::invalid_argument);
}

TEST_CASE("four-sigma gaussian truncation keeps the edge below 3.4e-4") {
    auto w = tfkit::make_gaussian_window(200.0, 8000.0);
    CHECK(w.size() % 2 == 1);
    CHECK(w.coefficients.front() < 3.4e-4);
    CHECK(w.coefficients.front() > 1e-5);
    CHECK(w.coefficients[w.size() / 2] == 1.0);
}

TEST_CASE("long gaussian attains the 1/(4 pi) bound") {
    const double fs = 8000.0;
    auto w = tfkit::make_gaussian_window(2000.0, fs);
    const double bt = tfkit::time_bandwidth_product(w, fs);
    CHECK(bt == doctest::Approx(kLowerBound).epsilon(0.02));
}

TEST_CASE("rectangular window sits strictly above the bound") {
    auto w = tfkit::make_window(WindowKind::rectangular, 128);
    CHECK(tfkit::time_bandwidth_product(w, 8000.0) > kLowerBound * 1.05);
}

TEST_CASE("dilating a gaussian leaves the product unchanged") {
    const double fs = 8000.0;
    const double alpha = 1600.0;
    const double a = tfkit::time_bandwidth_product(tfkit::make_gaussian_window(alpha, fs), fs);
    const double b = tfkit::time_bandwidth_product(tfkit::make_gaussian_window(alpha / 4.0, fs), fs);
    CHECK(a == doctest::Approx(b).epsilon(0.01));
}

TEST_CASE("uncertainty bound holds across a randomized window suite") {
    const double fs = 4000.0;
    for (std::uint64_t trial = 0; trial < 12; ++trial) {
        tfkit::Window w;
        switch (trial % 4) {
            case 0: w = tfkit::make_gaussian_window(100.0 + 400.0 * static_cast<double>(trial), fs); break;
            case 1: w = tfkit::make_window(WindowKind::hann, 32 + 16 * trial); break;
            case 2: w = tfkit::make_window(WindowKind::rectangular, 16 + 32 * trial); break;
            default: {
                w = tfkit::make_window(WindowKind::rectangular, 64);
                auto noise = oracle::random_real(64, trial);
                for (std::size_t i = 0; i < 64; ++i) w.coefficients[i] = 0.5 + 0.5 * std::abs(noise[i]);
                break;
            }
        }
        CHECK(tfkit::time_bandwidth_product(w, fs) >= kLowerBound - 1e-6);
    }
}

TEST_CASE("zero-energy window is a degenerate-window error") {
    tfkit::Window w = tfkit::make_window(WindowKind::rectangular, 8);
    for (auto& c : w.coefficients) c = 0.0;
    CHECK_THROWS_AS(tfkit::time_bandwidth_product(w, 1000.0), std::invalid_argument);
}
