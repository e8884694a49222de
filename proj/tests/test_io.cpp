// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "minlab/io.hpp"
#include "test_util.hpp"

using namespace minlab;

namespace {

namespace fs = std::filesystem;

struct TempFile {
    fs::path path;
    TempFile(const std::string& name, const std::string& content) {
        path = fs::temp_directory_path() / ("minlab_test_" + name);
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() {
        std::error_code ec;
        fs::remove(path, ec);
    }
};

std::string decode(const Sequence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.length(); ++i)
        out += s.is_gap(i) ? '-' : Alphabet::dna().symbol(s[i]);
    return out;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("fasta parses wrapped records") {
    const TempFile f("a.fa", ">chr1 assembly notes\nACGT\nacgt\n\n>chr2\nTTNTT\n");
    const auto seqs = read_fasta(f.path);
    REQUIRE(seqs.size() == 2);
    CHECK(decode(seqs.at("chr1")) == "ACGTACGT");  // header keeps the first token
    CHECK(decode(seqs.at("chr2")) == "TT-TT");     // N becomes a gap
}

TEST_CASE("fasta accepts crlf line endings") {
    const TempFile f("crlf.fa", ">s\r\nAC GT\r\nCA\r\n");
    const auto seqs = read_fasta(f.path);
    CHECK(decode(seqs.at("s")) == "ACGTCA");  // embedded blanks are skipped
}

TEST_CASE("fasta error cases") {
    CHECK_THROWS_AS(read_fasta("/nonexistent/minlab.fa"), IoError);
    const TempFile dup("dup.fa", ">a\nAC\n>a\nGT\n");
    CHECK_THROWS_AS(read_fasta(dup.path), IoError);
    const TempFile headerless("headerless.fa", "ACGT\n");
    CHECK_THROWS_AS(read_fasta(headerless.path), IoError);
    const TempFile noname("noname.fa", ">\nACGT\n");
    CHECK_THROWS_AS(read_fasta(noname.path), IoError);
    const TempFile empty("empty.fa", "");
    CHECK_THROWS_AS(read_fasta(empty.path), IoError);
}

TEST_CASE("regions parse three or four columns") {
    const TempFile f("r.tsv",
                     "# comment line\n"
                     "chr1\t10\t200\ttelomere_p\n"
                     "\n"
                     "chr2 5 60\n");
    const auto regions = read_regions(f.path);
    REQUIRE(regions.size() == 2);
    CHECK(regions[0].name == "chr1");
    CHECK(regions[0].start == 10);
    CHECK(regions[0].end == 200);
    CHECK(regions[0].label == "telomere_p");
    CHECK(regions[1].name == "chr2");
    CHECK(regions[1].label.empty());
}

TEST_CASE("regions error cases") {
    CHECK_THROWS_AS(read_regions("/nonexistent/minlab.tsv"), IoError);
    const TempFile two("two.tsv", "chr1\t10\n");
    CHECK_THROWS_AS(read_regions(two.path), IoError);
    const TempFile text("text.tsv", "chr1\tten\t20\n");
    CHECK_THROWS_AS(read_regions(text.path), IoError);
    const TempFile trailing("trail.tsv", "chr1\t10x\t20\n");
    CHECK_THROWS_AS(read_regions(trailing.path), IoError);
    const TempFile inverted("inv.tsv", "chr1\t20\t10\n");
    CHECK_THROWS_AS(read_regions(inverted.path), IoError);
    const TempFile zero("zero.tsv", "chr1\t10\t10\n");
    CHECK_THROWS_AS(read_regions(zero.path), IoError);
    const TempFile comments("comments.tsv", "# only\n# comments\n");
    CHECK(read_regions(comments.path).empty());
}

TEST_CASE("extract region slices the named sequence") {
    const TempFile f("x.fa", ">s\nAACCGGTTAA\n");
    const auto seqs = read_fasta(f.path);
    CHECK(decode(extract_region(seqs, {"s", 2, 6, ""})) == "CCGG");
    CHECK(decode(extract_region(seqs, {"s", 0, 10, ""})) == "AACCGGTTAA");
    CHECK_THROWS_AS(extract_region(seqs, {"t", 0, 4, ""}), IoError);
    CHECK_THROWS_AS(extract_region(seqs, {"s", 4, 11, ""}), IoError);
}

} // TEST_SUITE
