#include "ck/bounds.hpp"

#include <cstdlib>

namespace ck::bounds {

int max_n() {
  static const int value = [] {
    if (const char* s = std::getenv("CONDENSATION_KIT_MAX_N")) {
      char* end = nullptr;
      const long v = std::strtol(s, &end, 10);
      if (end != s && *end == '\0' && v >= 1 && v <= 16) {
        return static_cast<int>(v);
      }
    }
    return 8;
  }();
  return value;
}

}  // namespace ck::bounds
