// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "minlab/alphabet.hpp"
#include "minlab/hashing.hpp"
#include "minlab/window_scan.hpp"

namespace minlab {

// One selected position per valid window. window_index counts every window
// start (0-based), including any skipped for holding no valid k-mer.
struct WindowRecord {
    std::size_t window_index;
    std::size_t position;
};

class MinimizerSelection {
  public:
    MinimizerSelection(std::vector<WindowRecord> records, std::vector<std::size_t> distinct,
                       std::vector<Kmer> selected, int k, int w, std::size_t valid_kmers,
                       std::size_t total_windows);

    std::span<const WindowRecord> records() const noexcept { return records_; }
    // Sorted, deduplicated selected positions.
    std::span<const std::size_t> distinct_positions() const noexcept { return distinct_; }
    // Selected k-mers, aligned with distinct_positions().
    std::span<const Kmer> selected_kmers() const noexcept { return selected_; }
    // K-mer at a selected position; throws if the position was never selected.
    const Kmer& kmer_at(std::size_t position) const;

    int k() const noexcept { return k_; }
    int w() const noexcept { return w_; }
    // Number of gap-free k-mers in the scanned sequence (density denominator).
    std::size_t valid_kmer_count() const noexcept { return valid_kmers_; }
    // Total window starts scanned, whether or not they produced a record.
    std::size_t total_windows() const noexcept { return total_windows_; }

  private:
    std::vector<WindowRecord> records_;
    std::vector<std::size_t> distinct_;
    std::vector<Kmer> selected_;
    int k_;
    int w_;
    std::size_t valid_kmers_;
    std::size_t total_windows_;
};

// Scans all length-w windows of the k-mer sequence (stride 1) and records the
// extremal position of each under the ordering. Throws std::invalid_argument
// when parameters are inconsistent or no window holds a valid k-mer.
MinimizerSelection select_minimizers(const Sequence& seq, int k, int w, const KmerOrdering& ordering,
                                     TiePolicy ties = TiePolicy::kLeftmost);

struct DensityReport {
    double density;                    // distinct_selections / total_kmers
    std::size_t distinct_selections;
    std::size_t total_kmers;
    std::size_t window_count;          // windows that produced a record
};

DensityReport density(const MinimizerSelection& selection);

// Fraction of adjacent window pairs (consecutive window indices) that select
// the same position. Throws when no adjacent pair exists.
double adjacent_share_rate(const MinimizerSelection& selection);

// Extremal k-mer of a set under the ordering: the min-wise hash of the set.
// Score ties break by k-mer rank, so the result is a deterministic function
// of the k-mer values. Throws on an empty set or a k mismatch.
Kmer minhash_min(std::span<const Kmer> kmers, const KmerOrdering& ordering);

} // namespace minlab
