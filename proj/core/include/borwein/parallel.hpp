// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>

namespace borwein {

/// Worker count used by parallel sweeps. The BORWEIN_THREADS environment
/// variable overrides hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [begin, end) across workers. Each index must write
/// only its own output slot; iteration order within a worker is ascending,
/// so index-addressed results come out deterministic.
void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t)>& body);

}  // namespace borwein
