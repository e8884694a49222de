// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "minlab/alphabet.hpp"
#include "minlab/minimizer.hpp"

namespace minlab {

// Symbol Hamming distance between equal-length k-mers.
int hamming(const Kmer& a, const Kmer& b);

// L1 distance between binary vectors of equal dimension. For one-hot
// encodings this is exactly twice the symbol Hamming distance.
int l1_distance(const OneHotVector& a, const OneHotVector& b);

// Degree of x in S: sum of L1 distances from x to every element of S
// (including x itself if present, contributing 0).
long long degree(const OneHotVector& x, std::span<const OneHotVector> s);

struct DistanceStats {
    // Mean Hamming distance from each distinct minimizer to every k-mer of
    // the sequence.
    double mean_to_all = 0.0;
    // Mean pairwise Hamming distance between distinct minimizers; absent when
    // fewer than two positions were selected.
    std::optional<double> mean_pairwise;
    std::size_t minimizer_count = 0;
    std::size_t kmer_count = 0;
};

// Distance structure of a selection against the k-mers it was drawn from.
// Minimizers enter once per distinct position by default; dedup_by_value
// collapses equal k-mer values first.
DistanceStats distance_stats(const MinimizerSelection& selection, std::span<const Kmer> all_kmers,
                             bool dedup_by_value = false);

} // namespace minlab
