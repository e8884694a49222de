// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#include "minlab/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "minlab/minimizer.hpp"
#include "minlab/parallel.hpp"
#include "minlab/rng.hpp"
#include "minlab/simulation.hpp"
#include "minlab/stats.hpp"

namespace minlab {

namespace {

double binom_half_width(double p, double n) {
    return n > 0 ? kZ99 * std::sqrt(p * (1.0 - p) / n) : 0.0;
}

void check_vector_set(std::span<const OneHotVector> s) {
    if (s.size() < 2) throw std::invalid_argument("need at least 2 vectors");
    const std::size_t dim = s[0].dimension();
    const int m = s[0].set_count();
    if (m == 0) throw std::invalid_argument("vectors must have at least one set bit");
    for (const auto& v : s) {
        if (v.dimension() != dim) throw std::invalid_argument("dimension mismatch");
        if (v.set_count() != m) throw std::invalid_argument("set-bit counts differ");
    }
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j]) throw std::invalid_argument("duplicate vectors");
}

// Set-bit index lists, so scoring a trial touches only the set positions in
// ascending order (same accumulation as gaussian_score).
std::vector<std::vector<std::uint32_t>> bit_lists(std::span<const OneHotVector> s) {
    std::vector<std::vector<std::uint32_t>> lists(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto bits = s[i].bits();
        for (std::size_t b = 0; b < bits.size(); ++b)
            if (bits[b]) lists[i].push_back(static_cast<std::uint32_t>(b));
    }
    return lists;
}

} // namespace

MaxProbabilityEstimate estimate_max_probabilities(std::span<const OneHotVector> s, std::uint64_t trials,
                                                  std::uint64_t seed) {
    check_vector_set(s);
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    const std::size_t dim = s[0].dimension();
    const auto lists = bit_lists(s);

    // Winner index per trial; -1 marks a tie at the top.
    std::vector<std::int32_t> winner(trials, -1);
    parallel_for(trials, [&](std::size_t t) {
        SplitMix64 rng(derive_seed(seed, t));
        std::vector<double> g(dim);
        for (auto& x : g) x = rng.next_normal();
        double best = 0.0;
        std::int32_t arg = -1;
        bool tie = false;
        for (std::size_t i = 0; i < lists.size(); ++i) {
            double score = 0.0;
            for (const std::uint32_t b : lists[i]) score += g[b];
            if (arg < 0 || score > best) {
                best = score;
                arg = static_cast<std::int32_t>(i);
                tie = false;
            } else if (score == best) {
                tie = true;
            }
        }
        winner[t] = tie ? -1 : arg;
    });

    MaxProbabilityEstimate est;
    est.trials = trials;
    std::vector<std::uint64_t> wins(s.size(), 0);
    for (const std::int32_t w : winner) {
        if (w < 0)
            ++est.tie_trials;
        else
            ++wins[static_cast<std::size_t>(w)];
    }
    const auto effective = static_cast<double>(trials - est.tie_trials);
    if (effective <= 0) throw std::runtime_error("all trials tied");
    est.probabilities.resize(s.size());
    est.half_widths.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        est.probabilities[i] = static_cast<double>(wins[i]) / effective;
        est.half_widths[i] = binom_half_width(est.probabilities[i], effective);
    }
    return est;
}

MonotonicityReport check_degree_monotonicity(std::span<const OneHotVector> s, std::uint64_t trials,
                                             std::uint64_t seed) {
    MonotonicityReport rep;
    rep.estimate = estimate_max_probabilities(s, trials, seed);
    rep.degrees.reserve(s.size());
    for (const auto& v : s) rep.degrees.push_back(degree(v, s));

    const auto effective = static_cast<double>(rep.estimate.trials - rep.estimate.tie_trials);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (rep.degrees[i] <= rep.degrees[j]) continue;
            const double pi = rep.estimate.probabilities[i];
            const double pj = rep.estimate.probabilities[j];
            const double slack = kZ99 * std::sqrt(pi * (1.0 - pi) / effective + pj * (1.0 - pj) / effective);
            if (pj - pi > slack)
                rep.violations.push_back({i, j, rep.degrees[i], rep.degrees[j], pi, pj, slack});
        }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

ConditionalExpectationProfile conditional_expectation_profile(int k, int sigma, std::uint64_t trials,
                                                              std::uint64_t seed) {
    if (k < 1 || k > kMaxKmerLength) throw std::invalid_argument("k out of range");
    if (sigma < 2) throw std::invalid_argument("sigma out of range");
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    double universe_size = 1.0;
    for (int i = 0; i < k; ++i) universe_size *= sigma;
    if (universe_size > static_cast<double>(1 << 20))
        throw std::invalid_argument("sigma^k too large to enumerate");
    const auto universe = static_cast<std::size_t>(universe_size);
    const auto dim = static_cast<std::size_t>(sigma) * static_cast<std::size_t>(k);

    // Symbols of every k-mer in rank order, flattened.
    std::vector<std::int8_t> symbols(universe * static_cast<std::size_t>(k));
    for (std::size_t r = 0; r < universe; ++r) {
        std::size_t v = r;
        for (int j = k - 1; j >= 0; --j) {
            symbols[r * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)] =
                static_cast<std::int8_t>(v % static_cast<std::size_t>(sigma));
            v /= static_cast<std::size_t>(sigma);
        }
    }

    const std::size_t nbins = static_cast<std::size_t>(k) + 1;
    std::vector<double> per_trial(trials * nbins, 0.0);
    parallel_for(trials, [&](std::size_t t) {
        SplitMix64 rng(derive_seed(seed, t));
        std::vector<double> g(dim);
        for (auto& x : g) x = rng.next_normal();
        std::vector<double> score(universe);
        std::size_t arg = 0;
        for (std::size_t r = 0; r < universe; ++r) {
            const auto* sym = &symbols[r * static_cast<std::size_t>(k)];
            double sc = 0.0;
            for (int j = 0; j < k; ++j)
                sc += g[static_cast<std::size_t>(sigma) * static_cast<std::size_t>(j) +
                        static_cast<std::size_t>(sym[j])];
            score[r] = sc;
            if (sc > score[arg]) arg = r;
        }
        const auto* top = &symbols[arg * static_cast<std::size_t>(k)];
        std::vector<double> sums(nbins, 0.0);
        std::vector<std::uint64_t> counts(nbins, 0);
        for (std::size_t r = 0; r < universe; ++r) {
            const auto* sym = &symbols[r * static_cast<std::size_t>(k)];
            int d = 0;
            for (int j = 0; j < k; ++j) d += sym[j] != top[j];
            sums[static_cast<std::size_t>(d)] += score[r];
            ++counts[static_cast<std::size_t>(d)];
        }
        for (std::size_t b = 0; b < nbins; ++b)
            per_trial[t * nbins + b] = sums[b] / static_cast<double>(counts[b]);
    });

    ConditionalExpectationProfile prof;
    prof.trials = trials;
    std::vector<double> column(trials);
    for (std::size_t b = 0; b < nbins; ++b) {
        for (std::size_t t = 0; t < trials; ++t) column[t] = per_trial[t * nbins + b];
        const MeanStderr ms = summarize(column);
        std::uint64_t per = 1;
        // count of distance-b k-mers: C(k, b) * (sigma-1)^b
        std::uint64_t comb = 1;
        for (std::size_t i = 0; i < b; ++i)
            comb = comb * (static_cast<std::uint64_t>(k) - i) / (i + 1);
        for (std::size_t i = 0; i < b; ++i) per *= static_cast<std::uint64_t>(sigma - 1);
        prof.bins.push_back({static_cast<int>(b), ms.mean, ms.stderr_of_mean, comb * per});
    }
    prof.strictly_decreasing = true;
    for (std::size_t b = 0; b + 1 < prof.bins.size(); ++b) {
        const auto& hi = prof.bins[b];
        const auto& lo = prof.bins[b + 1];
        const double gap = hi.mean_score - lo.mean_score;
        const double need = 3.0 * std::sqrt(hi.stderr_of_mean * hi.stderr_of_mean +
                                            lo.stderr_of_mean * lo.stderr_of_mean);
        if (!(gap > need)) prof.strictly_decreasing = false;
    }
    return prof;
}

JaccardCollisionReport jaccard_collision_rate(std::span<const Kmer> a, std::span<const Kmer> b, int sigma,
                                              OrderingVariant family, std::uint64_t trials,
                                              std::uint64_t seed) {
    if (a.empty() || b.empty()) throw std::invalid_argument("empty k-mer set");
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    if (family == OrderingVariant::kLexicographicMin)
        throw std::invalid_argument("collision rate needs a seeded ordering family");
    const int k = a[0].length();
    for (const Kmer& km : a)
        if (km.length() != k) throw std::invalid_argument("k mismatch");
    for (const Kmer& km : b)
        if (km.length() != k) throw std::invalid_argument("k mismatch");

    // Exact Jaccard over k-mer values.
    auto distinct = [](std::span<const Kmer> v) {
        std::vector<Kmer> u;
        for (const Kmer& km : v) {
            bool seen = false;
            for (const Kmer& x : u)
                if (x == km) {
                    seen = true;
                    break;
                }
            if (!seen) u.push_back(km);
        }
        return u;
    };
    const std::vector<Kmer> ua = distinct(a);
    const std::vector<Kmer> ub = distinct(b);
    std::size_t inter = 0;
    for (const Kmer& x : ua)
        for (const Kmer& y : ub)
            if (x == y) {
                ++inter;
                break;
            }
    const std::size_t uni = ua.size() + ub.size() - inter;

    std::vector<std::uint8_t> hit(trials, 0);
    parallel_for(trials, [&](std::size_t t) {
        const std::uint64_t s = derive_seed(seed, t);
        const KmerOrdering ordering = family == OrderingVariant::kMultiplyShiftMin
                                          ? KmerOrdering::multiply_shift(k, sigma, s)
                                          : KmerOrdering::gaussian(k, sigma, s);
        hit[t] = minhash_min(a, ordering) == minhash_min(b, ordering) ? 1 : 0;
    });
    std::uint64_t hits = 0;
    for (const std::uint8_t h : hit) hits += h;

    JaccardCollisionReport rep;
    rep.trials = trials;
    rep.jaccard = static_cast<double>(inter) / static_cast<double>(uni);
    rep.collision_rate = static_cast<double>(hits) / static_cast<double>(trials);
    rep.half_width = binom_half_width(rep.collision_rate, static_cast<double>(trials));
    return rep;
}

DensityCheckReport expected_density_check(int k, int w, std::size_t length, std::uint64_t trials,
                                          std::uint64_t seed, OrderingVariant family) {
    if (trials < 2) throw std::invalid_argument("need at least 2 trials");
    if (length < static_cast<std::size_t>(k) + static_cast<std::size_t>(w) - 1)
        throw std::invalid_argument("sequence shorter than one window");
    if (family == OrderingVariant::kLexicographicMin)
        throw std::invalid_argument("density check needs a seeded ordering family");
    const Alphabet& dna = Alphabet::dna();

    std::vector<double> dens(trials, 0.0);
    parallel_for(trials, [&](std::size_t t) {
        const std::uint64_t st = derive_seed(seed, t);
        const Sequence seq = uniform_random_sequence(length, dna, derive_seed(st, 0));
        const KmerOrdering ordering = family == OrderingVariant::kMultiplyShiftMin
                                          ? KmerOrdering::multiply_shift(k, dna.size(), derive_seed(st, 1))
                                          : KmerOrdering::gaussian(k, dna.size(), derive_seed(st, 1));
        dens[t] = density(select_minimizers(seq, k, w, ordering)).density;
    });

    const MeanStderr ms = summarize(dens);
    DensityCheckReport rep;
    rep.k = k;
    rep.w = w;
    rep.length = length;
    rep.trials = trials;
    rep.mean_density = ms.mean;
    rep.stderr_of_mean = ms.stderr_of_mean;
    rep.target_asymptotic = 2.0 / (static_cast<double>(w) + 1.0);
    const double nk = static_cast<double>(length - static_cast<std::size_t>(k) + 1);
    const double nw = nk - static_cast<double>(w) + 1.0;
    rep.target_finite = (1.0 + (nw - 1.0) * rep.target_asymptotic) / nk;
    rep.pass = std::abs(ms.mean - rep.target_finite) <= 3.0 * ms.stderr_of_mean;
    return rep;
}

} // namespace minlab
