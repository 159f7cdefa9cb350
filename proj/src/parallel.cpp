#include "cascadia/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cascadia {

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CASCADIA_THREADS")) {
    try {
      const unsigned long value = std::stoul(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
      // Fall through to the hardware default on garbage.
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace cascadia
