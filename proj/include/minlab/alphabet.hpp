// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace minlab {

// Finite ordered set of symbols. Symbol i is the i-th character of the
// construction string; lookups are case-insensitive.
class Alphabet {
  public:
    explicit Alphabet(std::string_view symbols);

    static const Alphabet& dna();

    int size() const noexcept { return static_cast<int>(symbols_.size()); }
    // Index of c, or -1 if c is not in the alphabet.
    int index_of(char c) const noexcept { return lookup_[static_cast<unsigned char>(c)]; }
    char symbol(int index) const;
    const std::string& symbols() const noexcept { return symbols_; }

  private:
    std::string symbols_;
    std::array<std::int16_t, 256> lookup_{};
};

// Sequence over an alphabet, stored as symbol indices. Positions that did not
// parse (e.g. N in DNA input) hold kGap and are excluded from k-mer
// extraction.
class Sequence {
  public:
    static constexpr std::int8_t kGap = -1;

    Sequence() = default;
    explicit Sequence(std::vector<std::int8_t> indices) : idx_(std::move(indices)) {}

    std::size_t length() const noexcept { return idx_.size(); }
    bool empty() const noexcept { return idx_.empty(); }
    std::int8_t operator[](std::size_t i) const { return idx_[i]; }
    bool is_gap(std::size_t i) const { return idx_[i] == kGap; }
    std::span<const std::int8_t> indices() const noexcept { return idx_; }

    // Half-open slice [start, end). Throws std::out_of_range on bad bounds.
    Sequence subsequence(std::size_t start, std::size_t end) const;

  private:
    std::vector<std::int8_t> idx_;
};

inline constexpr int kMaxKmerLength = 32;

// Contiguous gap-free k-mer. Carries its source position when extracted from
// a sequence (-1 for free-standing k-mers). Equality compares symbols only,
// not positions.
class Kmer {
  public:
    Kmer(const Sequence& seq, std::size_t pos, int k);
    explicit Kmer(std::span<const std::int8_t> symbols, std::int64_t pos = -1);

    int length() const noexcept { return k_; }
    std::int64_t position() const noexcept { return pos_; }
    std::span<const std::int8_t> symbols() const noexcept { return {sym_.data(), static_cast<std::size_t>(k_)}; }

    friend bool operator==(const Kmer& a, const Kmer& b) noexcept {
        if (a.k_ != b.k_) return false;
        for (int i = 0; i < a.k_; ++i)
            if (a.sym_[i] != b.sym_[i]) return false;
        return true;
    }

  private:
    std::array<std::int8_t, kMaxKmerLength> sym_{};
    int k_ = 0;
    std::int64_t pos_ = -1;
};

// Binary vector with a cached set-bit count. one_hot() produces the
// block-structured encoding of a k-mer (one set bit per sigma-sized block);
// from_bits() admits arbitrary 0/1 vectors for the analytic experiments.
class OneHotVector {
  public:
    explicit OneHotVector(std::size_t dimension) : bits_(dimension, 0) {}
    static OneHotVector from_bits(std::vector<std::uint8_t> bits);
    // Convenience for string literals like "1100".
    static OneHotVector from_string(std::string_view bits);

    std::size_t dimension() const noexcept { return bits_.size(); }
    int set_count() const noexcept { return set_count_; }
    bool test(std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i);
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    friend bool operator==(const OneHotVector& a, const OneHotVector& b) noexcept {
        return a.bits_ == b.bits_;
    }

  private:
    std::vector<std::uint8_t> bits_;
    int set_count_ = 0;
};

// Maps text to symbol indices; unknown characters become gaps, whitespace is
// skipped.
Sequence parse_sequence(std::string_view text, const Alphabet& alphabet);

// All gap-free k-mers of seq in position order. Throws std::invalid_argument
// on k < 1 or k > kMaxKmerLength; returns an empty vector when the sequence
// is shorter than k.
std::vector<Kmer> kmers(const Sequence& seq, int k);

// One-hot encoding: dimension sigma*k, block j carries the bit of symbol j.
OneHotVector one_hot(const Kmer& kmer, const Alphabet& alphabet);

// Rank of the k-mer in lexicographic order (base-sigma value, first symbol
// most significant). Throws std::overflow_error if sigma^k exceeds 64 bits.
std::uint64_t kmer_rank(const Kmer& kmer, const Alphabet& alphabet);
std::uint64_t kmer_rank(std::span<const std::int8_t> symbols, int sigma);

} // namespace minlab
