// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include "tfkit/fft.hpp"

#include <cmath>
#include <numbers>
#include <unordered_map>

namespace tfkit {

namespace detail {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

namespace {

// Twiddle table for one power-of-two size: w[j] = exp(-i 2 pi j / n),
// j in [0, n/2). Every entry comes straight from polar() so butterfly error
// stays at O(log n) ulps instead of the O(n) of a recurrence.
struct Pow2Plan {
    std::size_t n = 0;
    std::vector<cplx> w;
};

const Pow2Plan& pow2_plan(std::size_t n) {
    thread_local std::unordered_map<std::size_t, Pow2Plan> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Pow2Plan plan;
    plan.n = n;
    plan.w.resize(n / 2);
    const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n / 2; ++j)
        plan.w[j] = std::polar(1.0, step * static_cast<double>(j));
    return cache.emplace(n, std::move(plan)).first->second;
}

}  // namespace

void fft_pow2_inplace(cplx* a, std::size_t n, int sign) {
    if (n <= 1) return;
    const Pow2Plan& plan = pow2_plan(n);

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                cplx w = plan.w[k * stride];
                if (sign > 0) w = std::conj(w);
                const cplx u = a[i + k];
                const cplx v = a[i + k + half] * w;
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
}

namespace {

// Chirp-z (Bluestein) plan for an arbitrary length n: the length-n DFT is a
// linear convolution with the chirp c_j = exp(-i pi j^2 / n), evaluated with
// power-of-two transforms of size m >= 2n-1. j^2 is reduced mod 2n in exact
// integer arithmetic so chirp angles stay small and accurate.
struct BluesteinPlan {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<cplx> chirp;           // c_j, j in [0, n)
    std::vector<cplx> kernel_spectrum; // fft of wrapped conj chirp
};

const BluesteinPlan& bluestein_plan(std::size_t n) {
    thread_local std::unordered_map<std::size_t, BluesteinPlan> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    BluesteinPlan plan;
    plan.n = n;
    plan.m = next_pow2(2 * n - 1);
    plan.chirp.resize(n);
    const double base = -std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t r = (j * j) % (2 * n);
        plan.chirp[j] = std::polar(1.0, base * static_cast<double>(r));
    }
    std::vector<cplx> kernel(plan.m, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        const cplx b = std::conj(plan.chirp[j]);
        kernel[j] = b;
        if (j != 0) kernel[plan.m - j] = b;
    }
    fft_pow2_inplace(kernel.data(), plan.m, -1);
    plan.kernel_spectrum = std::move(kernel);
    return cache.emplace(n, std::move(plan)).first->second;
}

// Forward transform (sign = -1) of length n, any n >= 1.
void dft_any(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    if ((n & (n - 1)) == 0) {
        fft_pow2_inplace(a.data(), n, sign);
        return;
    }
    if (sign > 0) {
        for (cplx& v : a) v = std::conj(v);
        dft_any(a, -1);
        for (cplx& v : a) v = std::conj(v);
        return;
    }
    const BluesteinPlan& plan = bluestein_plan(n);
    std::vector<cplx> work(plan.m, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) work[j] = a[j] * plan.chirp[j];
    fft_pow2_inplace(work.data(), plan.m, -1);
    for (std::size_t j = 0; j < plan.m; ++j) work[j] *= plan.kernel_spectrum[j];
    fft_pow2_inplace(work.data(), plan.m, +1);
    const double scale = 1.0 / static_cast<double>(plan.m);
    for (std::size_t k = 0; k < n; ++k) a[k] = plan.chirp[k] * work[k] * scale;
}

}  // namespace

}  // namespace detail

std::vector<cplx> dft_forward(std::span<const cplx> x, std::size_t n) {
    if (n == 0) throw std::invalid_argument("dft_forward: transform length must be >= 1");
    std::vector<cplx> a(n, cplx(0.0, 0.0));
    const std::size_t copy = std::min(n, x.size());
    for (std::size_t i = 0; i < copy; ++i) a[i] = x[i];
    detail::dft_any(a, -1);
    return a;
}

std::vector<cplx> dft_forward(const std::vector<cplx>& x, std::size_t n) {
    return dft_forward(std::span<const cplx>(x.data(), x.size()), n);
}

std::vector<cplx> dft_forward(const ComplexSignal& x, std::size_t n) {
    return dft_forward(std::span<const cplx>(x.samples.data(), x.samples.size()), n);
}

std::vector<cplx> dft_inverse(std::span<const cplx> spectrum) {
    const std::size_t n = spectrum.size();
    if (n == 0) throw std::invalid_argument("dft_inverse: spectrum must be non-empty");
    std::vector<cplx> a(spectrum.begin(), spectrum.end());
    detail::dft_any(a, +1);
    const double scale = 1.0 / static_cast<double>(n);
    for (cplx& v : a) v *= scale;
    return a;
}

std::vector<cplx> dft_inverse(const std::vector<cplx>& spectrum) {
    return dft_inverse(std::span<const cplx>(spectrum.data(), spectrum.size()));
}

ComplexSignal analytic_signal(const RealSignal& x) {
    x.validate();
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("analytic_signal: need at least 2 samples");

    std::vector<cplx> spectrum = dft_forward(to_complex(x), n);
    // One-sided construction: keep DC (and Nyquist for even n), double the
    // positive bins, zero the negative ones.
    if (n % 2 == 0) {
        for (std::size_t k = 1; k < n / 2; ++k) spectrum[k] *= 2.0;
        for (std::size_t k = n / 2 + 1; k < n; ++k) spectrum[k] = cplx(0.0, 0.0);
    } else {
        for (std::size_t k = 1; k <= (n - 1) / 2; ++k) spectrum[k] *= 2.0;
        for (std::size_t k = (n + 1) / 2; k < n; ++k) spectrum[k] = cplx(0.0, 0.0);
    }
    ComplexSignal out;
    out.sample_rate = x.sample_rate;
    out.samples = dft_inverse(spectrum);
    return out;
}

ComplexSignal upsample2(const ComplexSignal& x) {
    x.validate();
    const std::size_t n = x.size();
    std::vector<cplx> spectrum = dft_forward(x, n);
    std::vector<cplx> wide(2 * n, cplx(0.0, 0.0));
    if (n % 2 == 0) {
        for (std::size_t k = 0; k < n / 2; ++k) wide[k] = spectrum[k];
        wide[n / 2] = spectrum[n / 2] * 0.5;
        wide[2 * n - n / 2] = spectrum[n / 2] * 0.5;
        for (std::size_t j = 1; j < n / 2; ++j) wide[2 * n - j] = spectrum[n - j];
    } else {
        for (std::size_t k = 0; k <= (n - 1) / 2; ++k) wide[k] = spectrum[k];
        for (std::size_t j = 1; j <= (n - 1) / 2; ++j) wide[2 * n - j] = spectrum[n - j];
    }
    ComplexSignal out;
    out.sample_rate = 2.0 * x.sample_rate;
    out.samples = dft_inverse(wide);
    for (cplx& v : out.samples) v *= 2.0;
    return out;
}

}  // namespace tfkit
