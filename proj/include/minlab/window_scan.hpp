// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace minlab {

// How a window resolves exact score ties between positions.
//   kLeftmost       - first extremal position
//   kRightmost      - last extremal position
//   kPreferPrevious - keep the previous window's pick while it stays in the
//                     window and stays extremal; otherwise take the rightmost
//                     extremal position (robust winnowing)
enum class TiePolicy { kLeftmost, kRightmost, kPreferPrevious };

namespace detail {

template <class Key>
struct WindowPick {
    std::size_t window_index;
    std::size_t position;
    Key value;
};

// Single scan shared by minimizer selection and pooling, so the two paths
// cannot drift apart semantically. `better(a, b)` means a is strictly better
// in the ordering's extremum sense; equality is !better either way. Windows
// start at 0, stride, 2*stride, ...; positions with valid[p] == 0 do not
// compete, and windows with no valid position are omitted from the output.
template <class Key, class Better>
std::vector<WindowPick<Key>> scan_windows(std::span<const Key> keys, std::span<const std::uint8_t> valid,
                                          std::size_t w, std::size_t stride, TiePolicy ties, Better better) {
    std::vector<WindowPick<Key>> out;
    if (w == 0 || stride == 0 || keys.size() < w) return out;
    out.reserve((keys.size() - w) / stride + 1);
    std::optional<std::size_t> previous;
    std::size_t win = 0;
    for (std::size_t start = 0; start + w <= keys.size(); start += stride, ++win) {
        bool any = false;
        Key best{};
        std::size_t first = 0, last = 0;
        for (std::size_t p = start; p < start + w; ++p) {
            if (!valid.empty() && !valid[p]) continue;
            if (!any || better(keys[p], best)) {
                any = true;
                best = keys[p];
                first = last = p;
            } else if (!better(best, keys[p])) {
                last = p;
            }
        }
        if (!any) continue;
        std::size_t pick = first;
        switch (ties) {
            case TiePolicy::kLeftmost:
                pick = first;
                break;
            case TiePolicy::kRightmost:
                pick = last;
                break;
            case TiePolicy::kPreferPrevious:
                if (previous && *previous >= start && (valid.empty() || valid[*previous]) &&
                    !better(best, keys[*previous]) && !better(keys[*previous], best)) {
                    pick = *previous;
                } else {
                    pick = last;
                }
                break;
        }
        previous = pick;
        out.push_back({win, pick, best});
    }
    return out;
}

} // namespace detail
} // namespace minlab
