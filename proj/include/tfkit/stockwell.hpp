// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#pragma once

#include "tfkit/cwt.hpp"
#include "tfkit/signal.hpp"
#include "tfkit/tfgrid.hpp"

namespace tfkit {

/// Stockwell transform over the analysis band [f_lo, f_hi], computed row by
/// row in the frequency domain: the row for bin n is the inverse transform of
/// the shifted spectrum X(m + n) weighted by the Gaussian voice
/// exp(-2 pi^2 m^2 / n^2). Scaled so the time average of every f != 0 row
/// equals the DFT coefficient X(f); the f = 0 row holds the signal mean.
/// Phase is referenced to t = 0.
ComplexGrid stockwell(const RealSignal& x, double f_lo, double f_hi,
                      BoundaryMode boundary = BoundaryMode::circular);

/// Squared magnitudes with axes carried through.
TFGrid stockwell_power(const ComplexGrid& g);

}  // namespace tfkit
