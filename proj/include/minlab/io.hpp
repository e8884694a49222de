// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "minlab/alphabet.hpp"

namespace minlab {

// File-level failure (missing file, malformed record). Messages carry
// file:line context where applicable.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Region {
    std::string name;     // sequence name the region refers to
    std::uint64_t start;  // 0-based, inclusive
    std::uint64_t end;    // exclusive
    std::string label;    // optional display label
};

// FASTA reader over the DNA alphabet. Letters outside ACGT (any case) become
// gap positions; sequence order in the file is preserved by std::map's key
// order not being relied on anywhere.
std::map<std::string, Sequence> read_fasta(const std::filesystem::path& path);

// Tab- or whitespace-separated region list: name, start, end, optional label.
// Lines starting with '#' and blank lines are skipped.
std::vector<Region> read_regions(const std::filesystem::path& path);

// Slice of the named sequence. Throws IoError when the name is unknown or the
// interval is out of bounds.
Sequence extract_region(const std::map<std::string, Sequence>& sequences, const Region& region);

} // namespace minlab
