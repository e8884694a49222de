// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

namespace minlab {

// 0.995 standard normal quantile; z for a two-sided 99% interval.
inline constexpr double kZ99 = 2.5758293035489004;

struct MeanStderr {
    double mean = 0.0;
    double stddev = 0.0;
    double stderr_of_mean = 0.0;
    std::size_t n = 0;
};

// Two-pass sample mean / standard deviation / standard error.
inline MeanStderr summarize(std::span<const double> values) {
    MeanStderr s;
    s.n = values.size();
    if (s.n == 0) throw std::invalid_argument("no samples");
    double total = 0.0;
    for (const double v : values) total += v;
    s.mean = total / static_cast<double>(s.n);
    if (s.n >= 2) {
        double ss = 0.0;
        for (const double v : values) {
            const double d = v - s.mean;
            ss += d * d;
        }
        s.stddev = std::sqrt(ss / static_cast<double>(s.n - 1));
        s.stderr_of_mean = s.stddev / std::sqrt(static_cast<double>(s.n));
    }
    return s;
}

} // namespace minlab
