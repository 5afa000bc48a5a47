#pragma once

#include <cstdint>
#include <functional>

namespace xmm {

// Worker cap: min(hardware_concurrency, XMM_THREADS if set). At least 1.
int max_threads();

// Static block partition of [0, n) over at most max_threads() workers.
// Each index is processed exactly once and results must be written to
// per-index slots, so the outcome is independent of the worker count.
void parallel_for(int64_t n, const std::function<void(int64_t)>& fn);

}  // namespace xmm
