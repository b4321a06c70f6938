#include "homolink/parallel.hpp"

#include <cstdlib>
#include <string>

namespace homolink {

std::size_t default_thread_count() {
  if (const char* env = std::getenv("HOMOLINK_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace homolink
