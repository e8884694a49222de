// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#include "minlab/metrics.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace minlab {

namespace {

// Packs k symbols into a word, bit_width(sigma-1) bits each, when they fit.
// XOR + OR-fold + popcount then gives symbol Hamming distance in a handful of
// word ops instead of a k-step loop.
struct Packer {
    int group = 0;
    std::uint64_t lsb_mask = 0;
    bool usable = false;

    Packer(int k, int max_symbol) {
        int bits = 1;
        while ((1 << bits) <= max_symbol) ++bits;
        group = bits;
        if (k * bits <= 64) {
            usable = true;
            for (int j = 0; j < k; ++j) lsb_mask |= 1ULL << (j * bits);
        }
    }

    std::uint64_t pack(std::span<const std::int8_t> symbols) const {
        std::uint64_t x = 0;
        for (std::size_t j = 0; j < symbols.size(); ++j)
            x |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(symbols[j]))
                 << (static_cast<int>(j) * group);
        return x;
    }

    int distance(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t x = a ^ b;
        std::uint64_t folded = 0;
        for (int b2 = 0; b2 < group; ++b2) folded |= x >> b2;
        return std::popcount(folded & lsb_mask);
    }
};

int max_symbol_of(std::span<const Kmer> kmers) {
    int m = 1;
    for (const Kmer& km : kmers)
        for (const std::int8_t s : km.symbols())
            if (s > m) m = s;
    return m;
}

} // namespace

int hamming(const Kmer& a, const Kmer& b) {
    if (a.length() != b.length()) throw std::invalid_argument("k-mer length mismatch");
    const auto sa = a.symbols(), sb = b.symbols();
    int d = 0;
    for (std::size_t i = 0; i < sa.size(); ++i) d += sa[i] != sb[i];
    return d;
}

int l1_distance(const OneHotVector& a, const OneHotVector& b) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch");
    const auto ba = a.bits(), bb = b.bits();
    int d = 0;
    for (std::size_t i = 0; i < ba.size(); ++i) d += ba[i] != bb[i];
    return d;
}

long long degree(const OneHotVector& x, std::span<const OneHotVector> s) {
    long long total = 0;
    for (const auto& v : s) total += l1_distance(x, v);
    return total;
}

DistanceStats distance_stats(const MinimizerSelection& selection, std::span<const Kmer> all_kmers,
                             bool dedup_by_value) {
    if (all_kmers.empty()) throw std::invalid_argument("empty k-mer list");
    const int k = selection.k();
    for (const Kmer& km : all_kmers)
        if (km.length() != k) throw std::invalid_argument("k-mer length mismatch");

    std::vector<Kmer> mins(selection.selected_kmers().begin(), selection.selected_kmers().end());
    if (dedup_by_value) {
        std::vector<Kmer> uniq;
        for (const Kmer& km : mins) {
            bool seen = false;
            for (const Kmer& u : uniq)
                if (u == km) {
                    seen = true;
                    break;
                }
            if (!seen) uniq.push_back(km);
        }
        mins = std::move(uniq);
    }

    DistanceStats out;
    out.minimizer_count = mins.size();
    out.kmer_count = all_kmers.size();

    int max_sym = max_symbol_of(all_kmers);
    const int max_sym_min = max_symbol_of(mins);
    if (max_sym_min > max_sym) max_sym = max_sym_min;
    const Packer packer(k, max_sym);

    long long to_all = 0;
    long long pairwise = 0;
    if (packer.usable) {
        std::vector<std::uint64_t> pk(all_kmers.size());
        for (std::size_t i = 0; i < all_kmers.size(); ++i) pk[i] = packer.pack(all_kmers[i].symbols());
        std::vector<std::uint64_t> pm(mins.size());
        for (std::size_t i = 0; i < mins.size(); ++i) pm[i] = packer.pack(mins[i].symbols());
        for (const std::uint64_t m : pm)
            for (const std::uint64_t a : pk) to_all += packer.distance(m, a);
        for (std::size_t i = 0; i < pm.size(); ++i)
            for (std::size_t j = i + 1; j < pm.size(); ++j) pairwise += packer.distance(pm[i], pm[j]);
    } else {
        for (const Kmer& m : mins)
            for (const Kmer& a : all_kmers) to_all += hamming(m, a);
        for (std::size_t i = 0; i < mins.size(); ++i)
            for (std::size_t j = i + 1; j < mins.size(); ++j) pairwise += hamming(mins[i], mins[j]);
    }

    out.mean_to_all = static_cast<double>(to_all) /
                      (static_cast<double>(mins.size()) * static_cast<double>(all_kmers.size()));
    if (mins.size() >= 2) {
        const double npairs = static_cast<double>(mins.size()) * static_cast<double>(mins.size() - 1) / 2.0;
        out.mean_pairwise = static_cast<double>(pairwise) / npairs;
    }
    return out;
}

} // namespace minlab
