// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minlab/hashing.hpp"
#include "minlab/minimizer.hpp"
#include "minlab/simulation.hpp"

namespace minlab {

// Selection scheme exposed on the command line.
enum class Scheme { kRandom, kGaussian, kLexicographic };

KmerOrdering make_ordering(Scheme scheme, int k, int sigma, std::uint64_t seed);
const char* scheme_name(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view text);
const char* ties_name(TiePolicy ties);
std::optional<TiePolicy> parse_ties(std::string_view text);

// One aggregated measurement. Unavailable rows (region too short, metric
// undefined) keep their place in the CSV with NA mean/stderr.
struct ExperimentRow {
    std::string group;
    std::string scheme;
    std::string metric;
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    bool available = true;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

// Header: group,scheme,metric,mean,stderr,trials,seed
void write_rows_csv(std::ostream& out, std::span<const ExperimentRow> rows);

// Tandem-repeat sweep: for each repeat length, mean density and distance
// structure of random-hash and gaussian-filter minimizers over mutated
// repeats, paired per trial on the same sequence.
struct SweepParams {
    int k = 8;
    int w = 19;
    std::size_t length = 1007;
    double mutation_rate = 0.1;
    std::size_t repeat_min = 1;
    std::size_t repeat_max = 30;
    std::uint64_t trials = 400;
    std::uint64_t seed = 0;
    TiePolicy ties = TiePolicy::kLeftmost;
    SubstitutionModel substitution = SubstitutionModel::kForceChange;
};

std::vector<ExperimentRow> run_sweep(const SweepParams& params);

// Density of both schemes on regions extracted from a FASTA file; the
// sequence is fixed, trials vary only the ordering seeds.
struct TelomereParams {
    int k = 8;
    int w = 19;
    std::uint64_t trials = 400;
    std::uint64_t seed = 0;
    TiePolicy ties = TiePolicy::kLeftmost;
    std::filesystem::path fasta;
    std::filesystem::path regions;
};

std::vector<ExperimentRow> run_telomere(const TelomereParams& params);

// Single-sequence, single-scheme density report.
struct DensityRunParams {
    int k = 8;
    int w = 19;
    Scheme scheme = Scheme::kRandom;
    TiePolicy ties = TiePolicy::kLeftmost;
    std::uint64_t seed = 0;
};

struct DensityRunReport {
    DensityReport report;
    std::optional<double> share_rate;   // absent when no adjacent window pair exists
    std::size_t length = 0;
};

DensityRunReport run_single_density(const Sequence& seq, const DensityRunParams& params);

// Statistical validation suites behind `minlab validate`. trials == 0 keeps
// each check's default count; an explicit count rescales the statistical
// tolerances by sqrt(default/actual) so verdicts stay calibrated.
struct CheckRow {
    std::string suite;
    std::string metric;
    double estimate = 0.0;
    double target = 0.0;
    double half_width = 0.0;
    bool pass = false;
};

std::span<const std::string_view> validation_suite_names();
std::vector<CheckRow> run_validation_suite(std::string_view suite, std::uint64_t trials, std::uint64_t seed);

// Header: metric,estimate,target,half_width,verdict  (metric = suite.name)
void write_checks_csv(std::ostream& out, std::span<const CheckRow> rows);

} // namespace minlab
