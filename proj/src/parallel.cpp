#include "qedem/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qedem {

int worker_count() {
  if (const char* env = std::getenv("QEDEM_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
      // fall through to the hardware default on unparseable values
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace qedem
