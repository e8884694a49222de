// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minlab/alphabet.hpp"
#include "minlab/hashing.hpp"
#include "minlab/minimizer.hpp"

namespace minlab {

// Stride-sigma convolution of the filter over the one-hot encoding of the
// sequence: scores[i] is the filter's dot product with the window that covers
// k symbols starting at position i. Positions whose window touches a gap are
// marked invalid and score 0.
struct ConvOutput {
    std::vector<double> scores;
    std::vector<std::uint8_t> valid;
    int k = 0;
};

ConvOutput conv_layer(const Sequence& seq, const GaussianFilter& filter, const Alphabet& alphabet, int k);

// Width-w max pooling over the convolution scores. One entry per window that
// holds at least one valid score; window_index counts all stride steps.
struct PoolEntry {
    std::size_t window_index;
    std::size_t argmax;
    double value;
};

struct PoolOutput {
    std::vector<PoolEntry> entries;
    std::size_t width = 0;
    std::size_t stride = 0;
    std::size_t total_windows = 0;
};

PoolOutput maxpool_layer(const ConvOutput& conv, std::size_t w, std::size_t stride,
                         TiePolicy ties = TiePolicy::kLeftmost);
// Same scan with an explicit extremum sense (min pooling for negated filters).
PoolOutput pool_layer(const ConvOutput& conv, std::size_t w, std::size_t stride, TiePolicy ties,
                      ExtremumSense sense);

struct EquivalenceReport {
    struct Mismatch {
        std::size_t window_index;
        std::size_t pool_position;
        std::size_t minimizer_position;
        double pool_value;
        double minimizer_value;
    };
    bool pass = false;
    std::size_t windows_compared = 0;
    std::optional<Mismatch> first_mismatch;
};

// Compares a pooled convolution against a minimizer selection window by
// window: same window set, same positions, bit-identical values.
EquivalenceReport compare_pool_selection(const PoolOutput& pool, const MinimizerSelection& selection,
                                         const KmerOrdering& ordering);

// Runs both pipelines on one sequence/filter pair (stride 1) and compares.
EquivalenceReport equivalence_check(const Sequence& seq, int k, int w, const GaussianFilter& filter,
                                    const Alphabet& alphabet, TiePolicy ties = TiePolicy::kLeftmost);

} // namespace minlab
