// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#include "minlab/experiments.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "minlab/io.hpp"
#include "minlab/metrics.hpp"
#include "minlab/parallel.hpp"
#include "minlab/rng.hpp"
#include "minlab/stats.hpp"
#include "minlab/validation.hpp"

namespace minlab {

namespace {

// Top-level seed streams, one per command, so their trial seeds never collide.
constexpr std::uint64_t kSweepStream = 10;
constexpr std::uint64_t kTelomereStream = 11;
constexpr std::uint64_t kValidateStream = 12;

constexpr const char* kMetricDensity = "density";
constexpr const char* kMetricDistAll = "dist_to_all";
constexpr const char* kMetricDistPair = "dist_between_minimizers";

std::string format_g(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

MeanStderr column_stats(std::span<const double> values) { return summarize(values); }

} // namespace

KmerOrdering make_ordering(Scheme scheme, int k, int sigma, std::uint64_t seed) {
    switch (scheme) {
        case Scheme::kRandom:
            return KmerOrdering::multiply_shift(k, sigma, seed);
        case Scheme::kGaussian:
            return KmerOrdering::gaussian(k, sigma, seed);
        case Scheme::kLexicographic:
            return KmerOrdering::lexicographic(k, sigma);
    }
    throw std::logic_error("unreachable");
}

const char* scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::kRandom:
            return "random";
        case Scheme::kGaussian:
            return "gaussian";
        case Scheme::kLexicographic:
            return "lex";
    }
    return "?";
}

std::optional<Scheme> parse_scheme(std::string_view text) {
    if (text == "random") return Scheme::kRandom;
    if (text == "gaussian") return Scheme::kGaussian;
    if (text == "lex") return Scheme::kLexicographic;
    return std::nullopt;
}

const char* ties_name(TiePolicy ties) {
    switch (ties) {
        case TiePolicy::kLeftmost:
            return "leftmost";
        case TiePolicy::kRightmost:
            return "rightmost";
        case TiePolicy::kPreferPrevious:
            return "prefer-previous";
    }
    return "?";
}

std::optional<TiePolicy> parse_ties(std::string_view text) {
    if (text == "leftmost") return TiePolicy::kLeftmost;
    if (text == "rightmost") return TiePolicy::kRightmost;
    if (text == "prefer-previous") return TiePolicy::kPreferPrevious;
    return std::nullopt;
}

void write_rows_csv(std::ostream& out, std::span<const ExperimentRow> rows) {
    out << "group,scheme,metric,mean,stderr,trials,seed\n";
    for (const auto& r : rows) {
        out << r.group << ',' << r.scheme << ',' << r.metric << ',';
        if (r.available)
            out << format_g(r.mean) << ',' << format_g(r.stderr_of_mean);
        else
            out << "NA,NA";
        out << ',' << r.trials << ',' << r.seed << '\n';
    }
}

std::vector<ExperimentRow> run_sweep(const SweepParams& p) {
    if (p.repeat_min < 1 || p.repeat_min > p.repeat_max) throw std::invalid_argument("bad repeat range");
    if (p.trials < 2) throw std::invalid_argument("need at least 2 trials");
    if (p.length < static_cast<std::size_t>(p.k) + static_cast<std::size_t>(p.w) - 1)
        throw std::invalid_argument("sequence shorter than one window");
    if (p.repeat_max > p.length) throw std::invalid_argument("repeat unit longer than the sequence");
    const Alphabet& dna = Alphabet::dna();
    const std::uint64_t base = derive_seed(p.seed, kSweepStream);
    const std::size_t nr = p.repeat_max - p.repeat_min + 1;

    struct Trial {
        std::array<double, 2> dens;
        std::array<double, 2> dist_all;
        std::array<double, 2> dist_pair;
        std::array<bool, 2> has_pair;
    };
    std::vector<Trial> results(nr * p.trials);

    parallel_for(nr * p.trials, [&](std::size_t task) {
        const std::size_t ri = task / p.trials;
        const std::size_t t = task % p.trials;
        const std::uint64_t sr = derive_seed(base, p.repeat_min + ri);
        const std::uint64_t st = derive_seed(derive_seed(sr, 0), t);

        RepeatSpec spec;
        spec.repeat_length = p.repeat_min + ri;
        spec.total_length = p.length;
        spec.mutation_rate = p.mutation_rate;
        spec.seed = derive_seed(st, 0);
        spec.substitution = p.substitution;
        const Sequence seq = tandem_repeat(spec, dna);
        const std::vector<Kmer> all = kmers(seq, p.k);

        Trial& out = results[task];
        for (int s = 0; s < 2; ++s) {
            const KmerOrdering ordering =
                s == 0 ? KmerOrdering::multiply_shift(p.k, dna.size(), derive_seed(st, 1))
                       : KmerOrdering::gaussian(p.k, dna.size(), derive_seed(st, 2));
            const MinimizerSelection sel = select_minimizers(seq, p.k, p.w, ordering, p.ties);
            out.dens[s] = density(sel).density;
            const DistanceStats ds = distance_stats(sel, all);
            out.dist_all[s] = ds.mean_to_all;
            out.has_pair[s] = ds.mean_pairwise.has_value();
            out.dist_pair[s] = ds.mean_pairwise.value_or(0.0);
        }
    });

    std::vector<ExperimentRow> rows;
    rows.reserve(nr * 6);
    std::vector<double> col;
    col.reserve(p.trials);
    for (std::size_t ri = 0; ri < nr; ++ri) {
        const std::string group = std::to_string(p.repeat_min + ri);
        for (int s = 0; s < 2; ++s) {
            const char* scheme = s == 0 ? "random" : "gaussian";
            const Trial* base_trial = &results[ri * p.trials];

            ExperimentRow row{group, scheme, kMetricDensity, 0, 0, true, p.trials, p.seed};
            col.clear();
            for (std::size_t t = 0; t < p.trials; ++t) col.push_back(base_trial[t].dens[s]);
            MeanStderr ms = column_stats(col);
            row.mean = ms.mean;
            row.stderr_of_mean = ms.stderr_of_mean;
            rows.push_back(row);

            row.metric = kMetricDistAll;
            col.clear();
            for (std::size_t t = 0; t < p.trials; ++t) col.push_back(base_trial[t].dist_all[s]);
            ms = column_stats(col);
            row.mean = ms.mean;
            row.stderr_of_mean = ms.stderr_of_mean;
            rows.push_back(row);

            row.metric = kMetricDistPair;
            col.clear();
            for (std::size_t t = 0; t < p.trials; ++t)
                if (base_trial[t].has_pair[s]) col.push_back(base_trial[t].dist_pair[s]);
            if (col.size() >= 2) {
                ms = column_stats(col);
                row.mean = ms.mean;
                row.stderr_of_mean = ms.stderr_of_mean;
                row.trials = col.size();
            } else {
                row.available = false;
                row.trials = col.size();
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<ExperimentRow> run_telomere(const TelomereParams& p) {
    if (p.trials < 2) throw std::invalid_argument("need at least 2 trials");
    const Alphabet& dna = Alphabet::dna();
    const auto sequences = read_fasta(p.fasta);
    const auto regions = read_regions(p.regions);
    if (regions.empty()) throw IoError("no regions in " + p.regions.string());
    const std::uint64_t base = derive_seed(p.seed, kTelomereStream);

    struct Reg {
        std::string group;
        Sequence seq;
        bool viable;
    };
    std::vector<Reg> regs;
    regs.reserve(regions.size());
    const std::size_t min_len = static_cast<std::size_t>(p.k) + static_cast<std::size_t>(p.w) - 1;
    for (const Region& r : regions) {
        const Sequence seq = extract_region(sequences, r);
        const std::string group = r.label.empty()
                                      ? r.name + ":" + std::to_string(r.start) + "-" + std::to_string(r.end)
                                      : r.label;
        const bool viable = seq.length() >= min_len && !kmers(seq, p.k).empty();
        regs.push_back({group, seq, viable});
    }

    std::vector<std::size_t> viable_idx;
    for (std::size_t i = 0; i < regs.size(); ++i)
        if (regs[i].viable) viable_idx.push_back(i);

    // dens[(vi * trials + t) * 2 + scheme]
    std::vector<double> dens(viable_idx.size() * p.trials * 2, 0.0);
    parallel_for(viable_idx.size() * p.trials, [&](std::size_t task) {
        const std::size_t vi = task / p.trials;
        const std::size_t t = task % p.trials;
        const std::size_t ri = viable_idx[vi];
        const std::uint64_t st = derive_seed(derive_seed(base, ri), t);
        const Sequence& seq = regs[ri].seq;
        for (int s = 0; s < 2; ++s) {
            const KmerOrdering ordering =
                s == 0 ? KmerOrdering::multiply_shift(p.k, dna.size(), derive_seed(st, 0))
                       : KmerOrdering::gaussian(p.k, dna.size(), derive_seed(st, 1));
            dens[task * 2 + static_cast<std::size_t>(s)] =
                density(select_minimizers(seq, p.k, p.w, ordering, p.ties)).density;
        }
    });

    std::vector<ExperimentRow> rows;
    rows.reserve(regs.size() * 2);
    std::vector<double> col(p.trials);
    std::size_t vi = 0;
    for (std::size_t i = 0; i < regs.size(); ++i) {
        for (int s = 0; s < 2; ++s) {
            ExperimentRow row{regs[i].group, s == 0 ? "random" : "gaussian", kMetricDensity,
                              0,             0,
                              true,          p.trials,
                              p.seed};
            if (regs[i].viable) {
                for (std::size_t t = 0; t < p.trials; ++t)
                    col[t] = dens[(vi * p.trials + t) * 2 + static_cast<std::size_t>(s)];
                const MeanStderr ms = column_stats(col);
                row.mean = ms.mean;
                row.stderr_of_mean = ms.stderr_of_mean;
            } else {
                row.available = false;
            }
            rows.push_back(row);
        }
        if (regs[i].viable) ++vi;
    }
    return rows;
}

DensityRunReport run_single_density(const Sequence& seq, const DensityRunParams& p) {
    const KmerOrdering ordering = make_ordering(p.scheme, p.k, Alphabet::dna().size(), p.seed);
    const MinimizerSelection sel = select_minimizers(seq, p.k, p.w, ordering, p.ties);
    DensityRunReport rep;
    rep.report = density(sel);
    rep.length = seq.length();
    try {
        rep.share_rate = adjacent_share_rate(sel);
    } catch (const std::invalid_argument&) {
        rep.share_rate = std::nullopt;
    }
    return rep;
}

namespace {

// -------- validation suites --------

struct SuiteContext {
    std::uint64_t trials;   // 0 = per-check default
    std::uint64_t seed;
    std::vector<CheckRow> rows;

    std::uint64_t pick(std::uint64_t def) const { return trials == 0 ? def : trials; }
    static double scale(std::uint64_t def, std::uint64_t actual) {
        return std::sqrt(static_cast<double>(def) / static_cast<double>(actual));
    }

    void two_sided(std::string suite, std::string metric, double estimate, double target, double tol) {
        rows.push_back({std::move(suite), std::move(metric), estimate, target, tol,
                        std::abs(estimate - target) <= tol});
    }
};

std::vector<Kmer> distinct_random_kmers(std::size_t count, int k, int sigma, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::set<std::uint64_t> ranks;
    std::vector<Kmer> out;
    std::vector<std::int8_t> sym(static_cast<std::size_t>(k));
    while (out.size() < count) {
        for (auto& s : sym) s = static_cast<std::int8_t>(rng.next_below(static_cast<std::uint64_t>(sigma)));
        const std::uint64_t r = kmer_rank(sym, sigma);
        if (ranks.insert(r).second) out.emplace_back(sym);
    }
    return out;
}

void suite_maxprob(SuiteContext& ctx) {
    const std::uint64_t base = derive_seed(derive_seed(ctx.seed, kValidateStream), 0);
    const std::uint64_t n = ctx.pick(1'000'000);
    const double tol = 0.005 * SuiteContext::scale(1'000'000, n);

    const std::array<OneHotVector, 3> trio{OneHotVector::from_string("1100"),
                                           OneHotVector::from_string("1010"),
                                           OneHotVector::from_string("0011")};
    const auto est = estimate_max_probabilities(trio, n, derive_seed(base, 0));
    ctx.two_sided("maxprob", "trio_1100", est.probabilities[0], 0.375, tol);
    ctx.two_sided("maxprob", "trio_1010", est.probabilities[1], 0.25, tol);
    ctx.two_sided("maxprob", "trio_0011", est.probabilities[2], 0.375, tol);

    const std::array<OneHotVector, 2> pair{OneHotVector::from_string("10"),
                                           OneHotVector::from_string("01")};
    const auto est2 = estimate_max_probabilities(pair, n, derive_seed(base, 1));
    double dev2 = 0.0;
    for (const double p : est2.probabilities) dev2 = std::max(dev2, std::abs(p - 0.5));
    ctx.two_sided("maxprob", "pair_max_dev", dev2, 0.0, tol);

    const std::array<OneHotVector, 4> singles{
        OneHotVector::from_string("1000"), OneHotVector::from_string("0100"),
        OneHotVector::from_string("0010"), OneHotVector::from_string("0001")};
    const auto est4 = estimate_max_probabilities(singles, n, derive_seed(base, 2));
    double dev4 = 0.0;
    for (const double p : est4.probabilities) dev4 = std::max(dev4, std::abs(p - 0.25));
    ctx.two_sided("maxprob", "singleton_max_dev", dev4, 0.0, tol);
}

void suite_monotonicity(SuiteContext& ctx) {
    const std::uint64_t base = derive_seed(derive_seed(ctx.seed, kValidateStream), 1);
    const std::uint64_t n = ctx.pick(200'000);

    const std::array<OneHotVector, 3> trio{OneHotVector::from_string("1100"),
                                           OneHotVector::from_string("1010"),
                                           OneHotVector::from_string("0011")};
    const auto fixed = check_degree_monotonicity(trio, n, derive_seed(base, 0));
    ctx.two_sided("monotonicity", "trio_violations", static_cast<double>(fixed.violations.size()), 0.0,
                  0.0);

    const auto kms = distinct_random_kmers(8, 4, 4, derive_seed(base, 1));
    std::vector<OneHotVector> random_set;
    random_set.reserve(kms.size());
    for (const Kmer& km : kms) random_set.push_back(one_hot(km, Alphabet::dna()));
    const auto rnd = check_degree_monotonicity(random_set, n, derive_seed(base, 2));
    ctx.two_sided("monotonicity", "random8_violations", static_cast<double>(rnd.violations.size()), 0.0,
                  0.0);
}

void suite_profile(SuiteContext& ctx) {
    const std::uint64_t base = derive_seed(derive_seed(ctx.seed, kValidateStream), 2);
    const std::uint64_t n = ctx.pick(10'000);

    const auto prof = conditional_expectation_profile(3, 4, n, derive_seed(base, 0));
    ctx.two_sided("profile", "k3_sigma4_decreasing", prof.strictly_decreasing ? 1.0 : 0.0, 1.0, 0.0);

    const auto tiny = conditional_expectation_profile(1, 2, n, derive_seed(base, 1));
    ctx.two_sided("profile", "k1_sigma2_decreasing", tiny.strictly_decreasing ? 1.0 : 0.0, 1.0, 0.0);
}

void suite_jaccard(SuiteContext& ctx) {
    const std::uint64_t base = derive_seed(derive_seed(ctx.seed, kValidateStream), 3);
    const std::uint64_t n = ctx.pick(10'000);
    const double tol = 0.02 * SuiteContext::scale(10'000, n);
    const int k = 8, sigma = 4;

    const auto pool = distinct_random_kmers(20, k, sigma, derive_seed(base, 0));
    const std::vector<Kmer> shared(pool.begin(), pool.begin() + 5);
    std::vector<Kmer> a(shared), b(shared);
    a.insert(a.end(), pool.begin() + 5, pool.begin() + 7);    // |A| = 7
    b.insert(b.end(), pool.begin() + 7, pool.begin() + 10);   // |B| = 8, |A u B| = 10
    const std::vector<Kmer> left(pool.begin(), pool.begin() + 10);
    const std::vector<Kmer> right(pool.begin() + 10, pool.end());

    const auto same =
        jaccard_collision_rate(left, left, sigma, OrderingVariant::kMultiplyShiftMin, n, derive_seed(base, 1));
    ctx.two_sided("jaccard", "identical_rate", same.collision_rate, 1.0, 0.0);

    const auto half =
        jaccard_collision_rate(a, b, sigma, OrderingVariant::kMultiplyShiftMin, n, derive_seed(base, 2));
    ctx.two_sided("jaccard", "half_rate", half.collision_rate, half.jaccard, tol);

    const auto none =
        jaccard_collision_rate(left, right, sigma, OrderingVariant::kMultiplyShiftMin, n, derive_seed(base, 3));
    ctx.two_sided("jaccard", "disjoint_rate", none.collision_rate, 0.0, tol);

    const auto half_g =
        jaccard_collision_rate(a, b, sigma, OrderingVariant::kGaussianMax, n, derive_seed(base, 4));
    ctx.two_sided("jaccard", "half_rate_gaussian", half_g.collision_rate, half_g.jaccard, tol);
}

void suite_density(SuiteContext& ctx) {
    const std::uint64_t base = derive_seed(derive_seed(ctx.seed, kValidateStream), 4);
    const std::uint64_t n = ctx.pick(400);
    const double scale = SuiteContext::scale(400, n);

    const struct {
        int w;
        double target;
        double tol;
    } asym[] = {{9, 0.2, 0.01}, {19, 0.1, 0.005}, {39, 0.05, 0.005}};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto rep = expected_density_check(8, asym[i].w, 1007, n, derive_seed(base, i));
        ctx.two_sided("density", "uniform_w" + std::to_string(asym[i].w), rep.mean_density, asym[i].target,
                      asym[i].tol * scale);
    }
    const auto gauss =
        expected_density_check(8, 19, 1007, n, derive_seed(base, 3), OrderingVariant::kGaussianMax);
    ctx.two_sided("density", "uniform_w19_gaussian", gauss.mean_density, 0.1, 0.005 * scale);

    const int ws[] = {9, 19, 39};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto rep = expected_density_check(8, ws[i], 300, n, derive_seed(base, 4 + i));
        ctx.rows.push_back({"density", "finite_w" + std::to_string(ws[i]), rep.mean_density,
                            rep.target_finite, 3.0 * rep.stderr_of_mean, rep.pass});
    }
}

constexpr std::array<std::string_view, 5> kSuiteNames{"maxprob", "monotonicity", "profile", "jaccard",
                                                      "density"};

} // namespace

std::span<const std::string_view> validation_suite_names() { return kSuiteNames; }

std::vector<CheckRow> run_validation_suite(std::string_view suite, std::uint64_t trials,
                                           std::uint64_t seed) {
    SuiteContext ctx{trials, seed, {}};
    if (suite == "maxprob")
        suite_maxprob(ctx);
    else if (suite == "monotonicity")
        suite_monotonicity(ctx);
    else if (suite == "profile")
        suite_profile(ctx);
    else if (suite == "jaccard")
        suite_jaccard(ctx);
    else if (suite == "density")
        suite_density(ctx);
    else
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    return std::move(ctx.rows);
}

void write_checks_csv(std::ostream& out, std::span<const CheckRow> rows) {
    out << "metric,estimate,target,half_width,verdict\n";
    for (const auto& r : rows)
        out << r.suite << '.' << r.metric << ',' << format_g(r.estimate) << ',' << format_g(r.target)
            << ',' << format_g(r.half_width) << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
}

} // namespace minlab
