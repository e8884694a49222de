// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#include "minlab/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace minlab {

namespace {

std::string at(const std::filesystem::path& path, std::size_t line) {
    return path.string() + ":" + std::to_string(line);
}

} // namespace

std::map<std::string, Sequence> read_fasta(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::map<std::string, Sequence> out;
    std::string line, name;
    std::vector<std::int8_t> current;
    std::size_t lineno = 0;
    const Alphabet& dna = Alphabet::dna();

    auto flush = [&] {
        if (name.empty()) return;
        if (!out.emplace(name, Sequence(std::move(current))).second)
            throw IoError("duplicate sequence name '" + name + "' in " + path.string());
        current = {};
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            flush();
            std::istringstream header(line.substr(1));
            header >> name;
            if (name.empty()) throw IoError("empty FASTA header at " + at(path, lineno));
        } else {
            if (name.empty()) throw IoError("sequence data before any header at " + at(path, lineno));
            for (const char c : line) {
                if (std::isspace(static_cast<unsigned char>(c))) continue;
                const int s = dna.index_of(c);
                current.push_back(s < 0 ? Sequence::kGap : static_cast<std::int8_t>(s));
            }
        }
    }
    flush();
    if (out.empty()) throw IoError("no sequences in " + path.string());
    return out;
}

std::vector<Region> read_regions(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<Region> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        Region r;
        std::string start_s, end_s;
        if (!(fields >> r.name >> start_s >> end_s))
            throw IoError("region needs name, start, end at " + at(path, lineno));
        try {
            std::size_t used = 0;
            r.start = std::stoull(start_s, &used);
            if (used != start_s.size()) throw std::invalid_argument("");
            r.end = std::stoull(end_s, &used);
            if (used != end_s.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw IoError("bad region coordinates at " + at(path, lineno));
        }
        if (r.start >= r.end) throw IoError("empty region interval at " + at(path, lineno));
        fields >> r.label;  // optional; extra columns are ignored
        out.push_back(std::move(r));
    }
    return out;
}

Sequence extract_region(const std::map<std::string, Sequence>& sequences, const Region& region) {
    const auto it = sequences.find(region.name);
    if (it == sequences.end()) throw IoError("unknown sequence '" + region.name + "'");
    const Sequence& seq = it->second;
    if (region.end > seq.length())
        throw IoError("region " + region.name + ":" + std::to_string(region.start) + "-" +
                      std::to_string(region.end) + " exceeds sequence length " +
                      std::to_string(seq.length()));
    return seq.subsequence(region.start, region.end);
}

} // namespace minlab
