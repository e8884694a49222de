// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#include "minlab/hashing.hpp"

#include <stdexcept>

#include "minlab/rng.hpp"

namespace minlab {

MultiplyShiftHasher::MultiplyShiftHasher(std::size_t dimension, std::uint64_t seed) {
    if (dimension == 0) throw std::invalid_argument("hasher dimension must be positive");
    SplitMix64 rng(seed);
    a_.resize(dimension);
    for (auto& ai : a_) ai = rng.next_u64();
    b_ = rng.next_u64();
}

MultiplyShiftHasher::MultiplyShiftHasher(std::vector<std::uint64_t> multipliers, std::uint64_t offset)
    : a_(std::move(multipliers)), b_(offset) {
    if (a_.empty()) throw std::invalid_argument("hasher dimension must be positive");
}

std::uint32_t MultiplyShiftHasher::hash(std::span<const std::uint32_t> x) const {
    if (x.size() != a_.size()) throw std::invalid_argument("input dimension mismatch");
    std::uint64_t acc = b_;
    for (std::size_t i = 0; i < x.size(); ++i) acc += a_[i] * static_cast<std::uint64_t>(x[i]);
    return static_cast<std::uint32_t>(acc >> kOutputBits);
}

std::uint32_t MultiplyShiftHasher::hash_symbols(std::span<const std::int8_t> symbols) const {
    if (symbols.size() != a_.size()) throw std::invalid_argument("input dimension mismatch");
    std::uint64_t acc = b_;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i] < 0) throw std::invalid_argument("k-mer spans a gap");
        acc += a_[i] * static_cast<std::uint64_t>(static_cast<std::uint32_t>(symbols[i]));
    }
    return static_cast<std::uint32_t>(acc >> kOutputBits);
}

GaussianFilter::GaussianFilter(std::size_t dimension, std::uint64_t seed) {
    if (dimension == 0) throw std::invalid_argument("filter dimension must be positive");
    SplitMix64 rng(seed);
    w_.resize(dimension);
    for (auto& wi : w_) wi = rng.next_normal();
}

GaussianFilter::GaussianFilter(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw std::invalid_argument("filter dimension must be positive");
}

double gaussian_score(const GaussianFilter& filter, const OneHotVector& x) {
    if (x.dimension() != filter.dimension()) throw std::invalid_argument("dimension mismatch");
    const auto w = filter.weights();
    const auto bits = x.bits();
    double s = 0.0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) s += w[i];
    return s;
}

KmerOrdering KmerOrdering::multiply_shift(int k, int sigma, std::uint64_t seed) {
    if (k < 1 || k > kMaxKmerLength) throw std::invalid_argument("k out of range");
    if (sigma < 2) throw std::invalid_argument("sigma out of range");
    KmerOrdering o(OrderingVariant::kMultiplyShiftMin, k, sigma);
    o.hasher_.emplace(static_cast<std::size_t>(k), seed);
    return o;
}

KmerOrdering KmerOrdering::gaussian(int k, int sigma, std::uint64_t seed) {
    return gaussian(k, sigma, GaussianFilter(static_cast<std::size_t>(k) * static_cast<std::size_t>(sigma), seed));
}

KmerOrdering KmerOrdering::gaussian(int k, int sigma, GaussianFilter filter) {
    if (k < 1 || k > kMaxKmerLength) throw std::invalid_argument("k out of range");
    if (sigma < 2) throw std::invalid_argument("sigma out of range");
    if (filter.dimension() != static_cast<std::size_t>(k) * static_cast<std::size_t>(sigma))
        throw std::invalid_argument("filter dimension must be sigma*k");
    KmerOrdering o(OrderingVariant::kGaussianMax, k, sigma);
    o.filter_.emplace(std::move(filter));
    return o;
}

KmerOrdering KmerOrdering::lexicographic(int k, int sigma) {
    if (k < 1 || k > kMaxKmerLength) throw std::invalid_argument("k out of range");
    if (sigma < 2) throw std::invalid_argument("sigma out of range");
    return KmerOrdering(OrderingVariant::kLexicographicMin, k, sigma);
}

ExtremumSense KmerOrdering::sense() const noexcept {
    const bool base_max = variant_ == OrderingVariant::kGaussianMax;
    return (base_max != negate_) ? ExtremumSense::kMax : ExtremumSense::kMin;
}

double KmerOrdering::real_score(std::span<const std::int8_t> symbols) const {
    if (!real_valued()) throw std::logic_error("ordering has no real score");
    if (symbols.size() != static_cast<std::size_t>(k_)) throw std::invalid_argument("k mismatch");
    const double s = kmer_filter_score(filter_->weights(), sigma_, symbols);
    return negate_ ? -s : s;
}

std::pair<std::uint64_t, std::uint64_t> KmerOrdering::integer_key(std::span<const std::int8_t> symbols) const {
    if (real_valued()) throw std::logic_error("ordering has no integer key");
    if (symbols.size() != static_cast<std::size_t>(k_)) throw std::invalid_argument("k mismatch");
    const std::uint64_t rank = kmer_rank(symbols, sigma_);
    std::uint64_t primary = rank;
    if (variant_ == OrderingVariant::kMultiplyShiftMin) primary = hasher_->hash_symbols(symbols);
    if (negate_) return {~primary, ~rank};
    return {primary, rank};
}

KmerOrdering KmerOrdering::negate() const {
    KmerOrdering o = *this;
    o.negate_ = !o.negate_;
    return o;
}

} // namespace minlab
