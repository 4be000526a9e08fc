// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#pragma once

#include "tfkit/signal.hpp"
#include "tfkit/tfgrid.hpp"
#include "tfkit/window.hpp"

namespace tfkit {

/// Short-time Fourier transform. The signal is zero-padded by half a window
/// on each side so frame m is centered at t = m*hop/fs. Real input yields a
/// one-sided grid over [0, fs/2]; complex input keeps all nfft bins over
/// [0, fs). Frames are independent and computed in parallel.
ComplexGrid stft(const RealSignal& x, const Window& w, std::size_t hop, std::size_t nfft);
ComplexGrid stft(const ComplexSignal& x, const Window& w, std::size_t hop, std::size_t nfft);

/// Squared magnitudes of an STFT-family grid, axes carried through.
TFGrid spectrogram(const ComplexGrid& g, TransformKind kind = TransformKind::stft);

/// Gabor transform: the spectrogram of an STFT under the +/-4 sigma gaussian
/// window for this alpha. Bit-identical to composing the two calls yourself.
TFGrid gabor(const RealSignal& x, double alpha, std::size_t hop, std::size_t nfft);

}  // namespace tfkit
