// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#include "minlab/simulation.hpp"

#include <stdexcept>
#include <vector>

#include "minlab/rng.hpp"

namespace minlab {

Sequence tandem_repeat_from_unit(std::span<const std::int8_t> unit, std::size_t total_length,
                                 double mutation_rate, std::uint64_t seed, const Alphabet& alphabet,
                                 SubstitutionModel substitution) {
    if (unit.empty()) throw std::invalid_argument("empty repeat unit");
    if (unit.size() > total_length) throw std::invalid_argument("repeat unit longer than the sequence");
    if (!(mutation_rate >= 0.0) || !(mutation_rate <= 1.0))
        throw std::invalid_argument("mutation rate must lie in [0, 1]");
    const auto sigma = static_cast<std::uint64_t>(alphabet.size());
    for (const std::int8_t s : unit)
        if (s < 0 || s >= alphabet.size()) throw std::invalid_argument("unit symbol outside alphabet");

    std::vector<std::int8_t> idx(total_length);
    for (std::size_t i = 0; i < total_length; ++i) idx[i] = unit[i % unit.size()];

    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < total_length; ++i) {
        if (rng.next_unit() >= mutation_rate) continue;
        if (substitution == SubstitutionModel::kForceChange) {
            const auto shift = 1 + rng.next_below(sigma - 1);
            idx[i] = static_cast<std::int8_t>((static_cast<std::uint64_t>(idx[i]) + shift) % sigma);
        } else {
            idx[i] = static_cast<std::int8_t>(rng.next_below(sigma));
        }
    }
    return Sequence(std::move(idx));
}

Sequence tandem_repeat(const RepeatSpec& spec, const Alphabet& alphabet) {
    if (spec.repeat_length == 0) throw std::invalid_argument("repeat length must be positive");
    SplitMix64 unit_rng(derive_seed(spec.seed, 0));
    std::vector<std::int8_t> unit(spec.repeat_length);
    for (auto& s : unit) s = static_cast<std::int8_t>(unit_rng.next_below(static_cast<std::uint64_t>(alphabet.size())));
    return tandem_repeat_from_unit(unit, spec.total_length, spec.mutation_rate, derive_seed(spec.seed, 1),
                                   alphabet, spec.substitution);
}

Sequence uniform_random_sequence(std::size_t length, const Alphabet& alphabet, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::int8_t> idx(length);
    for (auto& s : idx) s = static_cast<std::int8_t>(rng.next_below(static_cast<std::uint64_t>(alphabet.size())));
    return Sequence(std::move(idx));
}

} // namespace minlab
