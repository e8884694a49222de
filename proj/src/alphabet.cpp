// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#include "minlab/alphabet.hpp"

#include <cctype>
#include <stdexcept>

namespace minlab {

Alphabet::Alphabet(std::string_view symbols) {
    if (symbols.size() < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");
    if (symbols.size() > 127) throw std::invalid_argument("alphabet too large");
    lookup_.fill(-1);
    for (char c : symbols) {
        const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (lookup_[static_cast<unsigned char>(up)] != -1)
            throw std::invalid_argument("duplicate symbol in alphabet");
        const auto idx = static_cast<std::int16_t>(symbols_.size());
        symbols_.push_back(up);
        lookup_[static_cast<unsigned char>(up)] = idx;
        lookup_[static_cast<unsigned char>(std::tolower(static_cast<unsigned char>(up)))] = idx;
    }
}

const Alphabet& Alphabet::dna() {
    static const Alphabet a("ACGT");
    return a;
}

char Alphabet::symbol(int index) const {
    if (index < 0 || index >= size()) throw std::out_of_range("symbol index out of range");
    return symbols_[static_cast<std::size_t>(index)];
}

Sequence Sequence::subsequence(std::size_t start, std::size_t end) const {
    if (start > end || end > idx_.size()) throw std::out_of_range("bad subsequence bounds");
    return Sequence(std::vector<std::int8_t>(idx_.begin() + static_cast<std::ptrdiff_t>(start),
                                             idx_.begin() + static_cast<std::ptrdiff_t>(end)));
}

Kmer::Kmer(const Sequence& seq, std::size_t pos, int k) : k_(k), pos_(static_cast<std::int64_t>(pos)) {
    if (k < 1 || k > kMaxKmerLength) throw std::invalid_argument("k out of range");
    if (pos + static_cast<std::size_t>(k) > seq.length()) throw std::out_of_range("k-mer overruns sequence");
    for (int i = 0; i < k; ++i) {
        const std::int8_t s = seq[pos + static_cast<std::size_t>(i)];
        if (s == Sequence::kGap) throw std::invalid_argument("k-mer spans a gap");
        sym_[static_cast<std::size_t>(i)] = s;
    }
}

Kmer::Kmer(std::span<const std::int8_t> symbols, std::int64_t pos)
    : k_(static_cast<int>(symbols.size())), pos_(pos) {
    if (symbols.empty() || symbols.size() > static_cast<std::size_t>(kMaxKmerLength))
        throw std::invalid_argument("k out of range");
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i] < 0) throw std::invalid_argument("k-mer spans a gap");
        sym_[i] = symbols[i];
    }
}

OneHotVector OneHotVector::from_bits(std::vector<std::uint8_t> bits) {
    OneHotVector v(0);
    v.bits_ = std::move(bits);
    for (auto& b : v.bits_) {
        if (b > 1) throw std::invalid_argument("bit vector entries must be 0 or 1");
        v.set_count_ += b;
    }
    return v;
}

OneHotVector OneHotVector::from_string(std::string_view bits) {
    std::vector<std::uint8_t> raw;
    raw.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("bit string must be 0/1");
        raw.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return from_bits(std::move(raw));
}

void OneHotVector::set(std::size_t i) {
    if (!bits_.at(i)) {
        bits_[i] = 1;
        ++set_count_;
    }
}

Sequence parse_sequence(std::string_view text, const Alphabet& alphabet) {
    std::vector<std::int8_t> idx;
    idx.reserve(text.size());
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        const int s = alphabet.index_of(c);
        idx.push_back(s < 0 ? Sequence::kGap : static_cast<std::int8_t>(s));
    }
    return Sequence(std::move(idx));
}

std::vector<Kmer> kmers(const Sequence& seq, int k) {
    if (k < 1 || k > kMaxKmerLength) throw std::invalid_argument("k out of range");
    std::vector<Kmer> out;
    if (seq.length() < static_cast<std::size_t>(k)) return out;
    const std::size_t n = seq.length() - static_cast<std::size_t>(k) + 1;
    out.reserve(n);
    // run = count of consecutive non-gap symbols ending at i.
    std::size_t run = 0;
    for (std::size_t i = 0; i < seq.length(); ++i) {
        run = seq.is_gap(i) ? 0 : run + 1;
        if (run >= static_cast<std::size_t>(k)) out.emplace_back(seq, i - static_cast<std::size_t>(k) + 1, k);
    }
    return out;
}

OneHotVector one_hot(const Kmer& kmer, const Alphabet& alphabet) {
    const auto sigma = static_cast<std::size_t>(alphabet.size());
    OneHotVector v(sigma * static_cast<std::size_t>(kmer.length()));
    const auto sym = kmer.symbols();
    for (std::size_t j = 0; j < sym.size(); ++j) {
        if (sym[j] >= alphabet.size()) throw std::invalid_argument("symbol outside alphabet");
        v.set(sigma * j + static_cast<std::size_t>(sym[j]));
    }
    return v;
}

std::uint64_t kmer_rank(std::span<const std::int8_t> symbols, int sigma) {
    if (sigma < 2) throw std::invalid_argument("sigma out of range");
    std::uint64_t r = 0;
    const auto base = static_cast<std::uint64_t>(sigma);
    for (const std::int8_t s : symbols) {
        if (s < 0 || s >= sigma) throw std::invalid_argument("symbol outside alphabet");
        if (r > (~0ULL - static_cast<std::uint64_t>(s)) / base)
            throw std::overflow_error("k-mer rank exceeds 64 bits");
        r = r * base + static_cast<std::uint64_t>(s);
    }
    return r;
}

std::uint64_t kmer_rank(const Kmer& kmer, const Alphabet& alphabet) {
    return kmer_rank(kmer.symbols(), alphabet.size());
}

} // namespace minlab
