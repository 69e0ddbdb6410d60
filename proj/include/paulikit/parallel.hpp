#pragma once

namespace paulikit {

// Worker-thread budget for parallel sections: the PAULIKIT_THREADS
// environment variable when set (minimum 1), otherwise the hardware
// concurrency. Read on every call so benchmarks can repin it.
unsigned max_worker_threads();

}  // namespace paulikit
