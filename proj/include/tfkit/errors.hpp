// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#pragma once

#include <stdexcept>
#include <string>

namespace tfkit {

/// Malformed or unsupported file content.
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (open, read, write).
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tfkit
