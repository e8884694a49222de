// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
//
// minlab: minimizer selection schemes, their convolution/pooling equivalent,
// and the statistical experiments around them.
//
// Exit codes: 0 success, 1 failed validation verdicts or runtime failure,
// 2 usage errors, 3 file I/O errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "minlab/experiments.hpp"
#include "minlab/io.hpp"

namespace {

using namespace minlab;

struct CommonOpts {
    int k = 8;
    int w = 19;
    std::uint64_t trials = 400;
    std::uint64_t seed = 0;
    std::string ties = "leftmost";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_trials = true) {
    cmd->add_option("--k", o.k, "k-mer length")->check(CLI::Range(1, 32));
    cmd->add_option("--w", o.w, "window length in k-mers")->check(CLI::PositiveNumber);
    if (with_trials) cmd->add_option("--trials", o.trials, "Monte-Carlo trials");
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--ties", o.ties, "tie policy: leftmost|rightmost|prefer-previous");
    cmd->add_option("--out", o.out, "write output to this file instead of stdout");
}

TiePolicy ties_or_throw(const std::string& text) {
    const auto t = parse_ties(text);
    if (!t) throw std::invalid_argument("unknown tie policy '" + text + "'");
    return *t;
}

// Stream to --out or stdout.
struct Sink {
    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file = std::make_unique<std::ofstream>(path);
        if (!*file) throw IoError("cannot write " + path);
    }
    std::ostream& stream() { return file ? *file : std::cout; }
    std::unique_ptr<std::ofstream> file;
};

int cmd_sweep(const CommonOpts& common, std::size_t length, double mutation_rate) {
    SweepParams p;
    p.k = common.k;
    p.w = common.w;
    p.length = length;
    p.mutation_rate = mutation_rate;
    p.trials = common.trials;
    p.seed = common.seed;
    p.ties = ties_or_throw(common.ties);
    const auto rows = run_sweep(p);
    Sink sink(common.out);
    write_rows_csv(sink.stream(), rows);
    return 0;
}

int cmd_telomere(const CommonOpts& common, const std::string& fasta, const std::string& regions) {
    TelomereParams p;
    p.k = common.k;
    p.w = common.w;
    p.trials = common.trials;
    p.seed = common.seed;
    p.ties = ties_or_throw(common.ties);
    p.fasta = fasta;
    p.regions = regions;
    const auto rows = run_telomere(p);
    Sink sink(common.out);
    write_rows_csv(sink.stream(), rows);
    return 0;
}

int cmd_validate(const CommonOpts& common, const std::string& suite, std::uint64_t trials) {
    std::vector<CheckRow> rows;
    if (suite == "all") {
        for (const auto name : validation_suite_names()) {
            auto part = run_validation_suite(name, trials, common.seed);
            rows.insert(rows.end(), part.begin(), part.end());
        }
    } else {
        rows = run_validation_suite(suite, trials, common.seed);
    }

    std::size_t passed = 0;
    for (const auto& r : rows) {
        std::printf("[%s] %s.%s estimate=%.9g target=%.9g half_width=%.9g\n", r.pass ? "PASS" : "FAIL",
                    r.suite.c_str(), r.metric.c_str(), r.estimate, r.target, r.half_width);
        passed += r.pass;
    }
    std::printf("%zu/%zu checks passed\n", passed, rows.size());

    if (!common.out.empty()) {
        Sink sink(common.out);
        write_checks_csv(sink.stream(), rows);
    } else {
        write_checks_csv(std::cout, rows);
    }
    return passed == rows.size() ? 0 : 1;
}

int cmd_density(const CommonOpts& common, const std::string& fasta, const std::string& scheme) {
    const auto parsed = parse_scheme(scheme);
    if (!parsed) throw std::invalid_argument("unknown scheme '" + scheme + "'");
    const auto sequences = read_fasta(fasta);
    // Deterministic pick: lexicographically first name.
    const auto& [name, seq] = *sequences.begin();

    DensityRunParams p;
    p.k = common.k;
    p.w = common.w;
    p.scheme = *parsed;
    p.ties = ties_or_throw(common.ties);
    p.seed = common.seed;
    const DensityRunReport rep = run_single_density(seq, p);

    Sink sink(common.out);
    std::ostream& os = sink.stream();
    char buf[64];
    os << "sequence " << name << "\n";
    os << "scheme " << scheme_name(p.scheme) << "\n";
    os << "ties " << ties_name(p.ties) << "\n";
    os << "length " << rep.length << "\n";
    os << "kmers " << rep.report.total_kmers << "\n";
    os << "windows " << rep.report.window_count << "\n";
    os << "distinct_minimizers " << rep.report.distinct_selections << "\n";
    std::snprintf(buf, sizeof buf, "%.9g", rep.report.density);
    os << "density " << buf << "\n";
    if (rep.share_rate) {
        std::snprintf(buf, sizeof buf, "%.9g", *rep.share_rate);
        os << "adjacent_share_rate " << buf << "\n";
    } else {
        os << "adjacent_share_rate NA\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-mer minimizer schemes and experiments"};
    app.require_subcommand(1);

    CommonOpts sweep_opts, telo_opts, val_opts, dens_opts;

    auto* sweep = app.add_subcommand("sweep", "tandem-repeat density/distance sweep");
    std::size_t length = 1007;
    double mutation_rate = 0.1;
    add_common(sweep, sweep_opts);
    sweep->add_option("--length", length, "sequence length");
    sweep->add_option("--mutation-rate", mutation_rate, "per-position mutation probability")
        ->check(CLI::Range(0.0, 1.0));

    auto* telo = app.add_subcommand("telomere", "per-region density on FASTA regions");
    std::string telo_fasta, telo_regions;
    add_common(telo, telo_opts);
    telo->add_option("--fasta", telo_fasta, "FASTA file")->required();
    telo->add_option("--regions", telo_regions, "region list (name start end [label])")->required();

    auto* val = app.add_subcommand("validate", "statistical validation suites");
    std::string suite = "all";
    std::uint64_t val_trials = 0;
    add_common(val, val_opts, /*with_trials=*/false);
    val->add_option("--suite", suite, "maxprob|monotonicity|profile|jaccard|density|all");
    val->add_option("--trials", val_trials, "override per-check trial counts (0 = defaults)");

    auto* dens = app.add_subcommand("density", "single-sequence density report");
    std::string dens_fasta, dens_scheme = "random";
    add_common(dens, dens_opts, /*with_trials=*/false);
    dens->add_option("--fasta", dens_fasta, "FASTA file")->required();
    dens->add_option("--scheme", dens_scheme, "random|gaussian|lex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(sweep_opts, length, mutation_rate);
        if (telo->parsed()) return cmd_telomere(telo_opts, telo_fasta, telo_regions);
        if (val->parsed()) return cmd_validate(val_opts, suite, val_trials);
        if (dens->parsed()) return cmd_density(dens_opts, dens_fasta, dens_scheme);
    } catch (const minlab::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
