#include "paulikit/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace paulikit {

unsigned max_worker_threads() {
  if (const char* env = std::getenv("PAULIKIT_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (...) {
      // fall through to hardware default on unparsable values
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace paulikit
