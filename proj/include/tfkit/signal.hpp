// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tfkit {

using cplx = std::complex<double>;

/// Uniformly sampled real-valued signal.
struct RealSignal {
    std::vector<double> samples;
    double sample_rate = 0.0;  // Hz

    std::size_t size() const { return samples.size(); }
    double duration() const { return static_cast<double>(samples.size()) / sample_rate; }

    void validate() const {
        if (sample_rate <= 0.0) throw std::invalid_argument("RealSignal: sample_rate must be positive");
        if (samples.empty()) throw std::invalid_argument("RealSignal: at least one sample required");
    }
};

/// Uniformly sampled complex-valued signal.
struct ComplexSignal {
    std::vector<cplx> samples;
    double sample_rate = 0.0;  // Hz

    std::size_t size() const { return samples.size(); }
    double duration() const { return static_cast<double>(samples.size()) / sample_rate; }

    void validate() const {
        if (sample_rate <= 0.0) throw std::invalid_argument("ComplexSignal: sample_rate must be positive");
        if (samples.empty()) throw std::invalid_argument("ComplexSignal: at least one sample required");
    }
};

/// Widen a real signal to complex with zero imaginary part.
inline ComplexSignal to_complex(const RealSignal& x) {
    ComplexSignal out;
    out.sample_rate = x.sample_rate;
    out.samples.assign(x.samples.begin(), x.samples.end());
    return out;
}

}  // namespace tfkit
