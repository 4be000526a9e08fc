// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tfkit/signal.hpp"

namespace tfkit {

/// Forward DFT of x, zero-padded or truncated to n bins.
/// Unnormalized: bin k = sum_m x[m] exp(-i 2 pi k m / n); bin k maps to
/// frequency k * fs / n. Any n >= 1 is supported (mixed lengths go through
/// the chirp-z path), so correctness does not depend on n being a power of
/// two.
std::vector<cplx> dft_forward(std::span<const cplx> x, std::size_t n);
std::vector<cplx> dft_forward(const std::vector<cplx>& x, std::size_t n);
std::vector<cplx> dft_forward(const ComplexSignal& x, std::size_t n);

/// Inverse DFT; carries the 1/N factor so dft_inverse(dft_forward(x)) == x.
std::vector<cplx> dft_inverse(std::span<const cplx> spectrum);
std::vector<cplx> dft_inverse(const std::vector<cplx>& spectrum);

/// Analytic signal via the frequency-domain construction: positive-frequency
/// bins doubled, negative-frequency bins zeroed, DC and (even N) Nyquist kept.
/// The real part of the result equals the input; the spectrum has no
/// negative-frequency content.
ComplexSignal analytic_signal(const RealSignal& x);

/// Band-limited 2x interpolation by spectral zero-insertion. The output has
/// twice the samples and twice the sample rate; even-index samples equal the
/// input. Intended for one-sided (analytic) inputs ahead of lag-product
/// transforms.
ComplexSignal upsample2(const ComplexSignal& x);

namespace detail {

/// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

/// In-place radix-2 transform; n must be a power of two. sign = -1 forward,
/// +1 inverse (no 1/N applied here).
void fft_pow2_inplace(cplx* data, std::size_t n, int sign);

}  // namespace detail

}  // namespace tfkit
