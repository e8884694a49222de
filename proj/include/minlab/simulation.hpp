// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <span>

#include "minlab/alphabet.hpp"

namespace minlab {

// How a mutated position is resampled.
//   kForceChange - uniform over the sigma-1 other symbols (always a change)
//   kUniformAny  - uniform over all sigma symbols (may silently keep it)
enum class SubstitutionModel { kForceChange, kUniformAny };

struct RepeatSpec {
    std::size_t repeat_length = 1;
    std::size_t total_length = 0;
    double mutation_rate = 0.0;
    std::uint64_t seed = 0;
    SubstitutionModel substitution = SubstitutionModel::kForceChange;
};

// Tiles a random unit of repeat_length symbols to total_length, then mutates
// each position independently with probability mutation_rate.
Sequence tandem_repeat(const RepeatSpec& spec, const Alphabet& alphabet);

// Same, with a caller-supplied unit.
Sequence tandem_repeat_from_unit(std::span<const std::int8_t> unit, std::size_t total_length,
                                 double mutation_rate, std::uint64_t seed, const Alphabet& alphabet,
                                 SubstitutionModel substitution = SubstitutionModel::kForceChange);

// I.i.d. uniform symbols.
Sequence uniform_random_sequence(std::size_t length, const Alphabet& alphabet, std::uint64_t seed);

} // namespace minlab
