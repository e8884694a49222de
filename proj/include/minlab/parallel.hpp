// Copyright (c) 2026 minlab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <functional>

namespace minlab {

// Worker count: MINLAB_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t worker_count();

// Runs body(i) for i in [0, n) across workers. Tasks must write only to their
// own slots; any exception is rethrown on the caller thread. threads == 0
// uses worker_count(). Results must not depend on the schedule; keying each
// task by its own derived seed keeps that true for every caller here.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, std::size_t threads = 0);

} // namespace minlab
