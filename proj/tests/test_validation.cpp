// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "minlab/validation.hpp"
#include "test_util.hpp"

using namespace minlab;
using testutil::kmer_of;

namespace {

std::vector<OneHotVector> vecs(std::initializer_list<const char*> bits) {
    std::vector<OneHotVector> out;
    for (const char* b : bits) out.push_back(OneHotVector::from_string(b));
    return out;
}

const std::vector<Kmer> kShared = {kmer_of("AAAAAAAA"), kmer_of("CCCCCCCC"), kmer_of("GGGGGGGG"),
                                   kmer_of("TTTTTTTT"), kmer_of("ACGTACGT")};
const std::vector<Kmer> kOnlyA = {kmer_of("AACCGGTT"), kmer_of("ATATATAT")};
const std::vector<Kmer> kOnlyB = {kmer_of("CGCGCGCG"), kmer_of("GTGTGTGT"), kmer_of("TCTCTCTC")};

std::vector<Kmer> concat(const std::vector<Kmer>& x, const std::vector<Kmer>& y) {
    std::vector<Kmer> out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

struct EnvGuard {
    std::string name;
    std::string old;
    bool had = false;
    explicit EnvGuard(const char* n) : name(n) {
        if (const char* v = std::getenv(n)) {
            had = true;
            old = v;
        }
    }
    ~EnvGuard() {
        if (had)
            setenv(name.c_str(), old.c_str(), 1);
        else
            unsetenv(name.c_str());
    }
};

} // namespace

TEST_SUITE("validation") {

TEST_CASE("max probabilities of the reference trio") {
    // {1100, 1010, 0011}: exact win probabilities are 3/8, 1/4, 3/8
    const auto trio = vecs({"1100", "1010", "0011"});
    const MaxProbabilityEstimate est = estimate_max_probabilities(trio, 100000, 12);
    REQUIRE(est.probabilities.size() == 3);
    CHECK(est.tie_trials == 0);
    CHECK(std::abs(est.probabilities[0] - 0.375) < 0.012);
    CHECK(std::abs(est.probabilities[1] - 0.250) < 0.012);
    CHECK(std::abs(est.probabilities[2] - 0.375) < 0.012);
    const double sum = est.probabilities[0] + est.probabilities[1] + est.probabilities[2];
    CHECK(std::abs(sum - 1.0) < 1e-12);
    for (const double hw : est.half_widths) {
        CHECK(hw > 0.0);
        CHECK(hw < 0.01);
    }
}

TEST_CASE("disjoint pairs split evenly") {
    const auto pair = vecs({"1100", "0011"});
    const MaxProbabilityEstimate est = estimate_max_probabilities(pair, 30000, 4);
    CHECK(std::abs(est.probabilities[0] - 0.5) < 0.02);
    CHECK(std::abs(est.probabilities[1] - 0.5) < 0.02);
}

TEST_CASE("disjoint singletons split four ways") {
    const auto quad = vecs({"1000", "0100", "0010", "0001"});
    const MaxProbabilityEstimate est = estimate_max_probabilities(quad, 100000, 9);
    for (const double p : est.probabilities) CHECK(std::abs(p - 0.25) < 0.012);
}

TEST_CASE("max probability input validation") {
    CHECK_THROWS_AS(estimate_max_probabilities(vecs({"1100"}), 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_max_probabilities(vecs({"1100", "110"}), 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_max_probabilities(vecs({"1100", "1110"}), 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_max_probabilities(vecs({"1100", "1100"}), 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_max_probabilities(vecs({"0000", "0011"}), 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_max_probabilities(vecs({"1100", "0011"}), 0, 1), std::invalid_argument);
}

TEST_CASE("degree monotonicity holds for the trio") {
    const auto trio = vecs({"1100", "1010", "0011"});
    const MonotonicityReport rep = check_degree_monotonicity(trio, 100000, 23);
    REQUIRE(rep.degrees.size() == 3);
    CHECK(rep.degrees[0] == 6);
    CHECK(rep.degrees[1] == 4);
    CHECK(rep.degrees[2] == 6);
    CHECK(rep.pass);
    CHECK(rep.violations.empty());
}

TEST_CASE("degree monotonicity holds for one-hot 4-mer sets") {
    // 8 distinct 4-mers over sigma=4, encoded one-hot: dimension 16, popcount 4
    const Alphabet& dna = Alphabet::dna();
    const char* words[] = {"ACGT", "AAAA", "ACGA", "TGCA", "TTTT", "GGCC", "ACCA", "GTGT"};
    std::vector<OneHotVector> set;
    for (const char* w : words) set.push_back(one_hot(kmer_of(w), dna));
    const MonotonicityReport rep = check_degree_monotonicity(set, 1000000, 31);
    CHECK(rep.pass);
}

TEST_CASE("conditional score profile decreases in distance") {
    const ConditionalExpectationProfile prof = conditional_expectation_profile(3, 4, 3000, 7);
    REQUIRE(prof.bins.size() == 4);
    const std::uint64_t want_counts[] = {1, 9, 27, 27};
    for (std::size_t b = 0; b < 4; ++b) {
        CHECK(prof.bins[b].distance == static_cast<int>(b));
        CHECK(prof.bins[b].kmers_per_trial == want_counts[b]);
        CHECK(prof.bins[b].stderr_of_mean > 0.0);
    }
    CHECK(prof.strictly_decreasing);
    CHECK(prof.bins[0].mean_score > prof.bins[3].mean_score);
}

TEST_CASE("binary one-symbol profile matches the closed form") {
    // max of two iid standard normals has mean 1/sqrt(pi)
    const ConditionalExpectationProfile prof = conditional_expectation_profile(1, 2, 20000, 3);
    REQUIRE(prof.bins.size() == 2);
    const double m = 1.0 / std::sqrt(std::acos(-1.0));
    CHECK(std::abs(prof.bins[0].mean_score - m) < 0.03);
    CHECK(std::abs(prof.bins[1].mean_score + m) < 0.03);
    CHECK(prof.strictly_decreasing);
}

TEST_CASE("profile input validation") {
    CHECK_THROWS_AS(conditional_expectation_profile(11, 4, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(conditional_expectation_profile(0, 4, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(conditional_expectation_profile(3, 1, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(conditional_expectation_profile(3, 4, 0, 1), std::invalid_argument);
}

TEST_CASE("identical sets always collide, disjoint sets never do") {
    const auto a = concat(kShared, kOnlyA);
    const JaccardCollisionReport same =
        jaccard_collision_rate(a, a, 4, OrderingVariant::kMultiplyShiftMin, 2000, 5);
    CHECK(same.jaccard == 1.0);
    CHECK(same.collision_rate == 1.0);

    const JaccardCollisionReport none =
        jaccard_collision_rate(kOnlyA, kOnlyB, 4, OrderingVariant::kMultiplyShiftMin, 2000, 6);
    CHECK(none.jaccard == 0.0);
    CHECK(none.collision_rate == 0.0);
}

TEST_CASE("collision rate tracks jaccard similarity") {
    // 5 shared, 2 extra on one side, 3 on the other: J = 5/10
    const auto a = concat(kShared, kOnlyA);
    const auto b = concat(kShared, kOnlyB);
    for (const OrderingVariant family :
         {OrderingVariant::kMultiplyShiftMin, OrderingVariant::kGaussianMax}) {
        const JaccardCollisionReport rep = jaccard_collision_rate(a, b, 4, family, 10000, 8);
        CHECK(rep.jaccard == 0.5);
        CHECK(std::abs(rep.collision_rate - 0.5) < 0.03);
        CHECK(rep.half_width > 0.0);
    }
}

TEST_CASE("duplicated inputs do not change the jaccard value") {
    const auto a = concat(kShared, kOnlyA);
    const auto b = concat(kShared, kOnlyB);
    const auto rep =
        jaccard_collision_rate(concat(a, a), b, 4, OrderingVariant::kMultiplyShiftMin, 500, 2);
    CHECK(rep.jaccard == 0.5);
}

TEST_CASE("jaccard input validation") {
    const auto a = concat(kShared, kOnlyA);
    CHECK_THROWS_AS(jaccard_collision_rate({}, a, 4, OrderingVariant::kMultiplyShiftMin, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(jaccard_collision_rate(a, a, 4, OrderingVariant::kLexicographicMin, 10, 1),
                    std::invalid_argument);
    const std::vector<Kmer> short_k = {kmer_of("ACG")};
    CHECK_THROWS_AS(jaccard_collision_rate(a, short_k, 4, OrderingVariant::kMultiplyShiftMin, 10, 1),
                    std::invalid_argument);
}

TEST_CASE("mean density matches the finite-length expectation") {
    for (const int w : {9, 19, 39}) {
        const DensityCheckReport rep = expected_density_check(8, w, 300, 400, 77);
        CHECK(rep.target_asymptotic == 2.0 / (w + 1.0));
        CHECK(rep.target_finite < rep.target_asymptotic);  // trailing kmers open no window
        CHECK(rep.pass);
    }
    const DensityCheckReport g =
        expected_density_check(8, 19, 300, 400, 78, OrderingVariant::kGaussianMax);
    CHECK(g.pass);
}

TEST_CASE("window width one selects everything") {
    const DensityCheckReport rep = expected_density_check(8, 1, 120, 10, 1);
    CHECK(rep.mean_density == 1.0);
    CHECK(rep.target_finite == 1.0);
    CHECK(rep.pass);
}

TEST_CASE("density check input validation") {
    CHECK_THROWS_AS(expected_density_check(8, 19, 300, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(expected_density_check(8, 19, 20, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(expected_density_check(8, 19, 300, 10, 1, OrderingVariant::kLexicographicMin),
                    std::invalid_argument);
}

TEST_CASE("estimates are independent of the thread count") {
    EnvGuard guard("MINLAB_THREADS");
    const auto trio = vecs({"1100", "1010", "0011"});
    setenv("MINLAB_THREADS", "1", 1);
    const MaxProbabilityEstimate one = estimate_max_probabilities(trio, 10000, 19);
    const DensityCheckReport done = expected_density_check(8, 19, 300, 60, 19);
    setenv("MINLAB_THREADS", "3", 1);
    const MaxProbabilityEstimate three = estimate_max_probabilities(trio, 10000, 19);
    const DensityCheckReport dthree = expected_density_check(8, 19, 300, 60, 19);
    CHECK(one.probabilities == three.probabilities);
    CHECK(one.tie_trials == three.tie_trials);
    CHECK(done.mean_density == dthree.mean_density);
    CHECK(done.stderr_of_mean == dthree.stderr_of_mean);
}

} // TEST_SUITE
