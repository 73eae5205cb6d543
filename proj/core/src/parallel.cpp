#include "logcert/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace logcert {

std::size_t worker_count() {
  std::size_t requested = 0;
  if (const char* env = std::getenv("LOGCERT_THREADS")) {
    try {
      requested = static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      requested = 0;
    }
  }
  if (requested == 0) requested = std::thread::hardware_concurrency();
  return requested == 0 ? 1 : requested;
}

}  // namespace logcert
