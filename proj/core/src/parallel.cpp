#include "relicut/parallel.hpp"

#include <cstdlib>
#include <string>

namespace relicut {

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RELICUT_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

}  // namespace relicut
