// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "minlab/alphabet.hpp"
#include "minlab/hashing.hpp"
#include "minlab/metrics.hpp"

namespace minlab {

// Monte-Carlo estimate of P[s = argmax of a fresh gaussian filter's score]
// for each s in a set of equal-popcount binary vectors. Trials with an exact
// score tie at the top are discarded (probability zero for distinct vectors).
struct MaxProbabilityEstimate {
    std::vector<double> probabilities;   // aligned with the input set
    std::vector<double> half_widths;     // per-element 99% half-widths
    std::uint64_t trials = 0;            // requested
    std::uint64_t tie_trials = 0;        // discarded
};

MaxProbabilityEstimate estimate_max_probabilities(std::span<const OneHotVector> s, std::uint64_t trials,
                                                  std::uint64_t seed);

// Checks that max-probability is non-decreasing in degree: whenever
// degree(s_i) > degree(s_j), p_i may not fall below p_j by more than the
// joint 99% interval of the two estimates.
struct MonotonicityReport {
    struct Violation {
        std::size_t higher_degree_index;
        std::size_t lower_degree_index;
        long long degree_high;
        long long degree_low;
        double p_high;
        double p_low;
        double allowed_slack;
    };
    bool pass = false;
    std::vector<long long> degrees;
    MaxProbabilityEstimate estimate;
    std::vector<Violation> violations;
};

MonotonicityReport check_degree_monotonicity(std::span<const OneHotVector> s, std::uint64_t trials,
                                             std::uint64_t seed);

// Conditional expectation of a k-mer's score given its Hamming distance to
// the argmax k-mer, estimated by enumerating the whole universe of sigma^k
// k-mers per trial. Bin d collects distance-d k-mers; bin 0 is the maximizer.
struct ConditionalExpectationProfile {
    struct Bin {
        int distance;
        double mean_score;
        double stderr_of_mean;
        std::uint64_t kmers_per_trial;
    };
    std::vector<Bin> bins;               // ascending distance, 0..k
    std::uint64_t trials = 0;
    // Every adjacent pair of bins decreases by more than 3 combined standard
    // errors.
    bool strictly_decreasing = false;
};

ConditionalExpectationProfile conditional_expectation_profile(int k, int sigma, std::uint64_t trials,
                                                              std::uint64_t seed);

// Rate at which the min-wise extremal k-mers of two sets coincide (by value)
// over independently seeded orderings, against the exact Jaccard similarity.
struct JaccardCollisionReport {
    double collision_rate = 0.0;
    double jaccard = 0.0;
    std::uint64_t trials = 0;
    double half_width = 0.0;             // 99% normal-approx interval
};

JaccardCollisionReport jaccard_collision_rate(std::span<const Kmer> a, std::span<const Kmer> b, int sigma,
                                              OrderingVariant family, std::uint64_t trials,
                                              std::uint64_t seed);

// Mean minimizer density on uniform random sequences against both the
// asymptotic target 2/(w+1) and the exact finite-length expectation
// (1 + (n_windows - 1) * 2/(w+1)) / n_kmers; the first window always
// contributes one selection, later windows add one with rate 2/(w+1), and the
// denominator counts the w-1 trailing k-mers that open no new window.
struct DensityCheckReport {
    int k = 0;
    int w = 0;
    std::size_t length = 0;
    std::uint64_t trials = 0;
    double mean_density = 0.0;
    double stderr_of_mean = 0.0;
    double target_asymptotic = 0.0;
    double target_finite = 0.0;
    bool pass = false;                   // |mean - target_finite| <= 3 stderr
};

DensityCheckReport expected_density_check(int k, int w, std::size_t length, std::uint64_t trials,
                                          std::uint64_t seed,
                                          OrderingVariant family = OrderingVariant::kMultiplyShiftMin);

} // namespace minlab
