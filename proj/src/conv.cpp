// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#include "minlab/conv.hpp"

#include <stdexcept>

namespace minlab {

ConvOutput conv_layer(const Sequence& seq, const GaussianFilter& filter, const Alphabet& alphabet, int k) {
    if (k < 1 || k > kMaxKmerLength) throw std::invalid_argument("k out of range");
    const auto sigma = alphabet.size();
    if (filter.dimension() != static_cast<std::size_t>(sigma) * static_cast<std::size_t>(k))
        throw std::invalid_argument("filter dimension must be sigma*k");
    ConvOutput out;
    out.k = k;
    if (seq.length() < static_cast<std::size_t>(k)) return out;
    const std::size_t n = seq.length() - static_cast<std::size_t>(k) + 1;
    out.scores.assign(n, 0.0);
    out.valid.assign(n, 0);
    const auto idx = seq.indices();
    const auto w = filter.weights();
    std::size_t run = 0;
    for (std::size_t i = 0; i < seq.length(); ++i) {
        run = seq.is_gap(i) ? 0 : run + 1;
        if (run < static_cast<std::size_t>(k)) continue;
        const std::size_t pos = i - static_cast<std::size_t>(k) + 1;
        out.valid[pos] = 1;
        out.scores[pos] = kmer_filter_score(w, sigma, idx.subspan(pos, static_cast<std::size_t>(k)));
    }
    return out;
}

PoolOutput pool_layer(const ConvOutput& conv, std::size_t w, std::size_t stride, TiePolicy ties,
                      ExtremumSense sense) {
    if (w == 0) throw std::invalid_argument("pool width must be positive");
    if (stride == 0) throw std::invalid_argument("stride must be positive");
    if (conv.scores.size() < w) throw std::invalid_argument("fewer scores than the pool width");
    PoolOutput out;
    out.width = w;
    out.stride = stride;
    out.total_windows = (conv.scores.size() - w) / stride + 1;
    std::vector<detail::WindowPick<double>> picks;
    if (sense == ExtremumSense::kMax)
        picks = detail::scan_windows<double>(conv.scores, conv.valid, w, stride, ties,
                                             [](double a, double b) { return a > b; });
    else
        picks = detail::scan_windows<double>(conv.scores, conv.valid, w, stride, ties,
                                             [](double a, double b) { return a < b; });
    out.entries.reserve(picks.size());
    for (const auto& p : picks) out.entries.push_back({p.window_index, p.position, p.value});
    return out;
}

PoolOutput maxpool_layer(const ConvOutput& conv, std::size_t w, std::size_t stride, TiePolicy ties) {
    return pool_layer(conv, w, stride, ties, ExtremumSense::kMax);
}

EquivalenceReport compare_pool_selection(const PoolOutput& pool, const MinimizerSelection& selection,
                                         const KmerOrdering& ordering) {
    EquivalenceReport rep;
    const auto& entries = pool.entries;
    const auto recs = selection.records();
    const std::size_t n = entries.size() < recs.size() ? entries.size() : recs.size();
    rep.windows_compared = n;
    rep.pass = entries.size() == recs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double sel_value = ordering.real_score(selection.kmer_at(recs[i].position).symbols());
        const bool same = entries[i].window_index == recs[i].window_index &&
                          entries[i].argmax == recs[i].position && entries[i].value == sel_value;
        if (!same) {
            rep.pass = false;
            rep.first_mismatch = EquivalenceReport::Mismatch{entries[i].window_index, entries[i].argmax,
                                                             recs[i].position, entries[i].value, sel_value};
            break;
        }
    }
    return rep;
}

EquivalenceReport equivalence_check(const Sequence& seq, int k, int w, const GaussianFilter& filter,
                                    const Alphabet& alphabet, TiePolicy ties) {
    const KmerOrdering ordering = KmerOrdering::gaussian(k, alphabet.size(), filter);
    const MinimizerSelection sel = select_minimizers(seq, k, w, ordering, ties);
    const ConvOutput conv = conv_layer(seq, filter, alphabet, k);
    const PoolOutput pool = maxpool_layer(conv, static_cast<std::size_t>(w), 1, ties);
    return compare_pool_selection(pool, sel, ordering);
}

} // namespace minlab
