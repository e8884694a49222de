// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>
#include <vector>

#include "minlab/hashing.hpp"
#include "minlab/metrics.hpp"
#include "minlab/rng.hpp"
#include "minlab/simulation.hpp"
#include "minlab/stats.hpp"
#include "test_util.hpp"

using namespace minlab;
using testutil::chi_square;
using testutil::kChiSq255P999;
using testutil::kmer_of;

namespace {

std::vector<std::uint32_t> u32s(std::initializer_list<std::uint32_t> v) { return {v}; }

} // namespace

TEST_SUITE("hashing") {

TEST_CASE("multiply-shift is deterministic per seed and differs across seeds") {
    const MultiplyShiftHasher h1(8, 1), h1b(8, 1), h2(8, 2);
    CHECK(h1.multipliers()[0] == h1b.multipliers()[0]);
    CHECK(h1.offset() == h1b.offset());
    CHECK(h1.multipliers()[0] != h2.multipliers()[0]);
    const std::vector<std::uint32_t> x(8, 0x1234u);
    CHECK(h1.hash(x) == h1b.hash(x));
}

TEST_CASE("pinned parameter cases") {
    // zero multipliers and offset: everything hashes to 0
    const MultiplyShiftHasher zero(std::vector<std::uint64_t>(4, 0), 0);
    CHECK(zero.hash(u32s({1, 2, 3, 4})) == 0);
    // offset 2^63 alone gives the top output bit
    const MultiplyShiftHasher top(std::vector<std::uint64_t>(4, 0), 1ULL << 63);
    CHECK(top.hash(u32s({9, 9, 9, 9})) == (1u << 31));
    // single multiplier of 2^32 maps x to x itself after the shift
    const MultiplyShiftHasher ident(std::vector<std::uint64_t>{1ULL << 32}, 0);
    CHECK(ident.hash(u32s({12345})) == 12345u);
}

TEST_CASE("input validation") {
    const MultiplyShiftHasher h(4, 1);
    CHECK_THROWS_AS(h.hash(u32s({1, 2, 3})), std::invalid_argument);
    CHECK_THROWS_AS(MultiplyShiftHasher(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(GaussianFilter(0, 1), std::invalid_argument);
}

TEST_CASE("hash values are uniform over seeds") {
    // fixed input, 1e4 independently seeded hashers, top byte of the output
    std::vector<std::uint64_t> buckets(256, 0);
    const std::vector<std::uint32_t> x = {3, 1, 0, 2, 2, 1, 3, 0};
    for (std::uint64_t s = 0; s < 10000; ++s) {
        const MultiplyShiftHasher h(8, derive_seed(99, s));
        ++buckets[h.hash(x) >> 24];
    }
    CHECK(chi_square(buckets, 10000.0 / 256.0) < kChiSq255P999);
}

TEST_CASE("multiplier bytes are uniform over seeds") {
    std::vector<std::uint64_t> buckets(256, 0);
    for (std::uint64_t s = 0; s < 10000; ++s) {
        const MultiplyShiftHasher h(4, derive_seed(7, s));
        for (const std::uint64_t a : h.multipliers()) ++buckets[a >> 56];
    }
    CHECK(chi_square(buckets, 40000.0 / 256.0) < kChiSq255P999);
}

TEST_CASE("hash pairs of distinct inputs fill the joint grid") {
    // strong universality: (h(x) top nibble, h(y) top nibble) uniform on 16x16
    std::vector<std::uint64_t> cells(256, 0);
    const std::vector<std::uint32_t> x = {0, 0, 0, 0, 0, 0, 0, 0};
    const std::vector<std::uint32_t> y = {0, 0, 0, 0, 0, 0, 0, 1};
    for (std::uint64_t s = 0; s < 100000; ++s) {
        const MultiplyShiftHasher h(8, derive_seed(123, s));
        const std::uint32_t hx = h.hash(x) >> 28;
        const std::uint32_t hy = h.hash(y) >> 28;
        ++cells[hx * 16 + hy];
    }
    CHECK(chi_square(cells, 100000.0 / 256.0) < kChiSq255P999);
}

TEST_CASE("collisions of distinct inputs are rare") {
    const std::vector<std::uint32_t> x = {1, 2, 3, 0, 1, 2, 3, 0};
    const std::vector<std::uint32_t> y = {1, 2, 3, 0, 1, 2, 3, 1};
    int collisions = 0;
    for (std::uint64_t s = 0; s < 1000000; ++s) {
        const MultiplyShiftHasher h(8, derive_seed(5, s));
        collisions += h.hash(x) == h.hash(y);
    }
    // expected 2^-32 per seed; allow a wide margin over 1e6 seeds
    CHECK(collisions <= 10);
}

TEST_CASE("gaussian filter weights are standard normal") {
    const GaussianFilter f(1000000, 2024);
    const GaussianFilter f2(1000000, 2024);
    const GaussianFilter g(1000000, 2025);
    CHECK(f.weights()[0] == f2.weights()[0]);
    CHECK(f.weights()[0] != g.weights()[0]);
    const MeanStderr ms = summarize(f.weights());
    CHECK(std::abs(ms.mean) < 0.005);
    CHECK(std::abs(ms.stddev * ms.stddev - 1.0) < 0.01);
}

TEST_CASE("gaussian_score on constructed filters") {
    const GaussianFilter ones(std::vector<double>(32, 1.0));
    const GaussianFilter zeros(std::vector<double>(32, 0.0));
    const Kmer km = kmer_of("ACGTACGT");
    const OneHotVector v = one_hot(km, Alphabet::dna());
    CHECK(gaussian_score(ones, v) == 8.0);
    CHECK(gaussian_score(zeros, v) == 0.0);
    const OneHotVector small = OneHotVector::from_string("1100");
    CHECK_THROWS_AS(gaussian_score(ones, small), std::invalid_argument);
}

TEST_CASE("score of a k-mer has variance k over filters") {
    const Kmer km = kmer_of("ACGTACGT");
    const OneHotVector v = one_hot(km, Alphabet::dna());
    std::vector<double> scores;
    scores.reserve(20000);
    for (std::uint64_t s = 0; s < 20000; ++s)
        scores.push_back(gaussian_score(GaussianFilter(32, derive_seed(11, s)), v));
    const MeanStderr ms = summarize(scores);
    CHECK(std::abs(ms.mean) < 0.1);
    CHECK(std::abs(ms.stddev * ms.stddev - 8.0) < 0.4);
}

TEST_CASE("score differences have variance equal to the L1 distance") {
    const Kmer a = kmer_of("AAAAAAAA");
    const Kmer b = kmer_of("CCCCCAAA");  // Hamming 5, L1 10
    const Alphabet& dna = Alphabet::dna();
    const OneHotVector va = one_hot(a, dna), vb = one_hot(b, dna);
    CHECK(l1_distance(va, vb) == 10);
    std::vector<double> diffs;
    diffs.reserve(20000);
    for (std::uint64_t s = 0; s < 20000; ++s) {
        const GaussianFilter f(32, derive_seed(13, s));
        diffs.push_back(gaussian_score(f, va) - gaussian_score(f, vb));
    }
    const MeanStderr ms = summarize(diffs);
    CHECK(std::abs(ms.mean) < 0.15);
    CHECK(std::abs(ms.stddev * ms.stddev - 10.0) < 0.5);
}

TEST_CASE("kmer_filter_score matches gaussian_score on the encoding bitwise") {
    const Alphabet& dna = Alphabet::dna();
    SplitMix64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const Sequence s = uniform_random_sequence(8, dna, rng.next_u64());
        const Kmer km(s, 0, 8);
        const GaussianFilter f(32, rng.next_u64());
        const double direct = kmer_filter_score(f.weights(), 4, km.symbols());
        const double encoded = gaussian_score(f, one_hot(km, dna));
        CHECK(direct == encoded);
    }
}

TEST_CASE("orderings are deterministic and validate k") {
    const KmerOrdering ms = KmerOrdering::multiply_shift(8, 4, 5);
    const KmerOrdering ms2 = KmerOrdering::multiply_shift(8, 4, 5);
    const Kmer km = kmer_of("ACGTACGT");
    CHECK(ms.integer_key(km.symbols()) == ms2.integer_key(km.symbols()));
    CHECK(ms.sense() == ExtremumSense::kMin);
    CHECK_THROWS_AS(ms.integer_key(kmer_of("ACG").symbols()), std::invalid_argument);
    CHECK_THROWS_AS(ms.real_score(km.symbols()), std::logic_error);

    const KmerOrdering g = KmerOrdering::gaussian(8, 4, 5);
    CHECK(g.sense() == ExtremumSense::kMax);
    CHECK(g.real_valued());
    CHECK_THROWS_AS(g.integer_key(km.symbols()), std::logic_error);

    const KmerOrdering lex = KmerOrdering::lexicographic(2, 4);
    CHECK(lex.integer_key(kmer_of("CA").symbols()).first == 4);
}

TEST_CASE("negation reverses every comparison") {
    SplitMix64 rng(77);
    const KmerOrdering ms = KmerOrdering::multiply_shift(6, 4, 17);
    const KmerOrdering msn = ms.negate();
    const KmerOrdering g = KmerOrdering::gaussian(6, 4, 17);
    const KmerOrdering gn = g.negate();
    CHECK(msn.sense() == ExtremumSense::kMax);
    CHECK(gn.sense() == ExtremumSense::kMin);
    const Alphabet& dna = Alphabet::dna();
    for (int trial = 0; trial < 60; ++trial) {
        const Sequence s = uniform_random_sequence(12, dna, rng.next_u64());
        const Kmer a(s, 0, 6), b(s, 6, 6);
        CHECK((ms.integer_key(a.symbols()) < ms.integer_key(b.symbols())) ==
              (msn.integer_key(a.symbols()) > msn.integer_key(b.symbols())));
        CHECK((g.real_score(a.symbols()) > g.real_score(b.symbols())) ==
              (gn.real_score(a.symbols()) < gn.real_score(b.symbols())));
    }
}

TEST_CASE("splitmix64 basics") {
    SplitMix64 a(1), b(1), c(2);
    CHECK(a.next_u64() == b.next_u64());
    CHECK(a.next_u64() != c.next_u64());
    SplitMix64 u(99);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.next_unit();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        CHECK(u.next_below(7) < 7);
    }
    // derive_seed separates streams
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    // polar normals: mean 0, variance 1
    SplitMix64 n(5);
    std::vector<double> xs(200000);
    for (auto& x : xs) x = n.next_normal();
    const MeanStderr msn = summarize(xs);
    CHECK(std::abs(msn.mean) < 0.01);
    CHECK(std::abs(msn.stddev * msn.stddev - 1.0) < 0.02);
}

} // TEST_SUITE
