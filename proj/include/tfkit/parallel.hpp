// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#pragma once

#include <cstddef>
#include <functional>

namespace tfkit {

/// Worker cap: TFKIT_THREADS when set to a positive integer, otherwise the
/// hardware concurrency.
std::size_t worker_count();

/// Run fn over [0, n) split into contiguous chunks, one per worker. Callers
/// must write disjoint output ranges; results are then independent of
/// evaluation order.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace tfkit
