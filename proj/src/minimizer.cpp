// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#include "minlab/minimizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace minlab {

namespace {

using IntKey = std::pair<std::uint64_t, std::uint64_t>;

// Per-position keys over every k-mer slot of the sequence, plus validity.
struct Keyed {
    std::vector<double> real;
    std::vector<IntKey> integer;
    std::vector<std::uint8_t> valid;
    std::size_t valid_count = 0;
};

Keyed key_positions(const Sequence& seq, int k, const KmerOrdering& ordering) {
    Keyed out;
    if (seq.length() < static_cast<std::size_t>(k)) return out;
    const std::size_t n = seq.length() - static_cast<std::size_t>(k) + 1;
    out.valid.assign(n, 0);
    if (ordering.real_valued())
        out.real.assign(n, 0.0);
    else
        out.integer.assign(n, IntKey{});
    const auto idx = seq.indices();
    std::size_t run = 0;
    for (std::size_t i = 0; i < seq.length(); ++i) {
        run = seq.is_gap(i) ? 0 : run + 1;
        if (run < static_cast<std::size_t>(k)) continue;
        const std::size_t pos = i - static_cast<std::size_t>(k) + 1;
        const std::span<const std::int8_t> sym = idx.subspan(pos, static_cast<std::size_t>(k));
        out.valid[pos] = 1;
        ++out.valid_count;
        if (ordering.real_valued())
            out.real[pos] = ordering.real_score(sym);
        else
            out.integer[pos] = ordering.integer_key(sym);
    }
    return out;
}

} // namespace

MinimizerSelection::MinimizerSelection(std::vector<WindowRecord> records, std::vector<std::size_t> distinct,
                                       std::vector<Kmer> selected, int k, int w, std::size_t valid_kmers,
                                       std::size_t total_windows)
    : records_(std::move(records)),
      distinct_(std::move(distinct)),
      selected_(std::move(selected)),
      k_(k),
      w_(w),
      valid_kmers_(valid_kmers),
      total_windows_(total_windows) {}

const Kmer& MinimizerSelection::kmer_at(std::size_t position) const {
    const auto it = std::lower_bound(distinct_.begin(), distinct_.end(), position);
    if (it == distinct_.end() || *it != position) throw std::out_of_range("position was not selected");
    return selected_[static_cast<std::size_t>(it - distinct_.begin())];
}

MinimizerSelection select_minimizers(const Sequence& seq, int k, int w, const KmerOrdering& ordering,
                                     TiePolicy ties) {
    if (k < 1 || k > kMaxKmerLength) throw std::invalid_argument("k out of range");
    if (w < 1) throw std::invalid_argument("w out of range");
    if (ordering.k() != k) throw std::invalid_argument("ordering was built for a different k");
    if (seq.length() < static_cast<std::size_t>(k) + static_cast<std::size_t>(w) - 1)
        throw std::invalid_argument("sequence shorter than one window");

    const Keyed keys = key_positions(seq, k, ordering);
    const std::size_t n = keys.valid.size();
    const std::size_t total_windows = n - static_cast<std::size_t>(w) + 1;

    const bool want_max = ordering.sense() == ExtremumSense::kMax;
    std::vector<detail::WindowPick<double>> rpicks;
    std::vector<detail::WindowPick<IntKey>> ipicks;
    std::vector<WindowRecord> records;
    if (ordering.real_valued()) {
        if (want_max)
            rpicks = detail::scan_windows<double>(keys.real, keys.valid, static_cast<std::size_t>(w), 1, ties,
                                                  [](double a, double b) { return a > b; });
        else
            rpicks = detail::scan_windows<double>(keys.real, keys.valid, static_cast<std::size_t>(w), 1, ties,
                                                  [](double a, double b) { return a < b; });
        records.reserve(rpicks.size());
        for (const auto& p : rpicks) records.push_back({p.window_index, p.position});
    } else {
        if (want_max)
            ipicks = detail::scan_windows<IntKey>(keys.integer, keys.valid, static_cast<std::size_t>(w), 1, ties,
                                                  [](const IntKey& a, const IntKey& b) { return a > b; });
        else
            ipicks = detail::scan_windows<IntKey>(keys.integer, keys.valid, static_cast<std::size_t>(w), 1, ties,
                                                  [](const IntKey& a, const IntKey& b) { return a < b; });
        records.reserve(ipicks.size());
        for (const auto& p : ipicks) records.push_back({p.window_index, p.position});
    }

    if (records.empty()) throw std::invalid_argument("no window holds a valid k-mer");

    std::vector<std::size_t> distinct;
    distinct.reserve(records.size());
    for (const auto& r : records) distinct.push_back(r.position);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<Kmer> selected;
    selected.reserve(distinct.size());
    for (const std::size_t pos : distinct) selected.emplace_back(seq, pos, k);

    return MinimizerSelection(std::move(records), std::move(distinct), std::move(selected), k, w,
                              keys.valid_count, total_windows);
}

DensityReport density(const MinimizerSelection& selection) {
    DensityReport r{};
    r.distinct_selections = selection.distinct_positions().size();
    r.total_kmers = selection.valid_kmer_count();
    r.window_count = selection.records().size();
    r.density = static_cast<double>(r.distinct_selections) / static_cast<double>(r.total_kmers);
    return r;
}

double adjacent_share_rate(const MinimizerSelection& selection) {
    const auto recs = selection.records();
    std::size_t pairs = 0, shared = 0;
    for (std::size_t i = 1; i < recs.size(); ++i) {
        if (recs[i].window_index != recs[i - 1].window_index + 1) continue;
        ++pairs;
        if (recs[i].position == recs[i - 1].position) ++shared;
    }
    if (pairs == 0) throw std::invalid_argument("no adjacent window pairs");
    return static_cast<double>(shared) / static_cast<double>(pairs);
}

Kmer minhash_min(std::span<const Kmer> kmers, const KmerOrdering& ordering) {
    if (kmers.empty()) throw std::invalid_argument("empty k-mer set");
    const Kmer* best = nullptr;
    if (ordering.real_valued()) {
        double best_score = 0.0;
        std::uint64_t best_rank = 0;
        const bool want_max = ordering.sense() == ExtremumSense::kMax;
        for (const Kmer& km : kmers) {
            if (km.length() != ordering.k()) throw std::invalid_argument("k mismatch");
            const double s = ordering.real_score(km.symbols());
            const std::uint64_t r = kmer_rank(km.symbols(), ordering.sigma());
            const bool take = !best || (want_max ? s > best_score : s < best_score) ||
                              (s == best_score && r < best_rank);
            if (take) {
                best = &km;
                best_score = s;
                best_rank = r;
            }
        }
    } else {
        IntKey best_key{};
        const bool want_max = ordering.sense() == ExtremumSense::kMax;
        for (const Kmer& km : kmers) {
            if (km.length() != ordering.k()) throw std::invalid_argument("k mismatch");
            const IntKey key = ordering.integer_key(km.symbols());
            const bool take = !best || (want_max ? key > best_key : key < best_key);
            if (take) {
                best = &km;
                best_key = key;
            }
        }
    }
    return *best;
}

} // namespace minlab
