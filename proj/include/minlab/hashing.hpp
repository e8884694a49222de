// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minlab/alphabet.hpp"

namespace minlab {

// Vector multiply-shift hash: h(x) = ((sum_i a_i x_i + b) mod 2^64) >> 32.
// Strongly universal on 32-bit coordinates; two distinct inputs collide with
// probability 2^-32 over the draw of (a, b).
class MultiplyShiftHasher {
  public:
    static constexpr int kInputBits = 32;
    static constexpr int kOutputBits = 32;
    static constexpr int kInternalBits = 64;

    MultiplyShiftHasher(std::size_t dimension, std::uint64_t seed);
    // Explicit parameters, mainly for pinning edge cases in tests.
    MultiplyShiftHasher(std::vector<std::uint64_t> multipliers, std::uint64_t offset);

    std::uint32_t hash(std::span<const std::uint32_t> x) const;
    std::uint32_t hash_symbols(std::span<const std::int8_t> symbols) const;

    std::size_t dimension() const noexcept { return a_.size(); }
    std::span<const std::uint64_t> multipliers() const noexcept { return a_; }
    std::uint64_t offset() const noexcept { return b_; }

  private:
    std::vector<std::uint64_t> a_;
    std::uint64_t b_ = 0;
};

// Dense real filter with i.i.d. standard normal weights, or explicit weights
// for constructed cases.
class GaussianFilter {
  public:
    GaussianFilter(std::size_t dimension, std::uint64_t seed);
    explicit GaussianFilter(std::vector<double> weights);

    std::size_t dimension() const noexcept { return w_.size(); }
    std::span<const double> weights() const noexcept { return w_; }

  private:
    std::vector<double> w_;
};

// Dot product of the filter with a binary vector, accumulated in ascending
// bit-index order. Every scoring path in the library funnels through this
// exact summation so scores compare bit-identically across call sites.
double gaussian_score(const GaussianFilter& filter, const OneHotVector& x);

// Same accumulation, driven directly by k-mer symbols. Block j of the filter
// contributes weight sigma*j + symbol(j); identical to scoring one_hot(kmer).
inline double kmer_filter_score(std::span<const double> weights, int sigma, std::span<const std::int8_t> symbols) {
    double s = 0.0;
    for (std::size_t j = 0; j < symbols.size(); ++j)
        s += weights[static_cast<std::size_t>(sigma) * j + static_cast<std::size_t>(symbols[j])];
    return s;
}

enum class ExtremumSense { kMin, kMax };
enum class OrderingVariant { kMultiplyShiftMin, kGaussianMax, kLexicographicMin };

// Total order on k-mers, used both for minimizer selection and min-wise
// hashing. Three families:
//   multiply_shift  - argmin of a strongly universal integer hash
//   gaussian        - argmax of a random linear filter score
//   lexicographic   - argmin of the k-mer rank (no randomness)
// Integer families break score ties by k-mer rank; remaining ties (equal
// k-mers) fall to the selector's position policy. Gaussian scores of distinct
// k-mers tie only on a measure-zero event, which keeps the order's argmax
// aligned with plain floating-point comparison.
class KmerOrdering {
  public:
    static KmerOrdering multiply_shift(int k, int sigma, std::uint64_t seed);
    static KmerOrdering gaussian(int k, int sigma, std::uint64_t seed);
    static KmerOrdering gaussian(int k, int sigma, GaussianFilter filter);
    static KmerOrdering lexicographic(int k, int sigma);

    OrderingVariant variant() const noexcept { return variant_; }
    ExtremumSense sense() const noexcept;
    bool real_valued() const noexcept { return variant_ == OrderingVariant::kGaussianMax; }
    bool negated() const noexcept { return negate_; }
    int k() const noexcept { return k_; }
    int sigma() const noexcept { return sigma_; }

    // Real-valued score (gaussian family only).
    double real_score(std::span<const std::int8_t> symbols) const;
    // (primary, tiebreak) key for the integer families; compared
    // lexicographically in the direction of sense().
    std::pair<std::uint64_t, std::uint64_t> integer_key(std::span<const std::int8_t> symbols) const;

    const GaussianFilter* filter() const noexcept { return filter_ ? &*filter_ : nullptr; }

    // Same order with every comparison reversed (min <-> max).
    KmerOrdering negate() const;

  private:
    KmerOrdering(OrderingVariant v, int k, int sigma) : variant_(v), k_(k), sigma_(sigma) {}

    OrderingVariant variant_;
    int k_;
    int sigma_;
    bool negate_ = false;
    std::optional<MultiplyShiftHasher> hasher_;
    std::optional<GaussianFilter> filter_;
};

} // namespace minlab
