#include "fishlab/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace fishlab {

std::size_t worker_count() {
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("FISHLAB_THREADS")) {
    std::size_t value = 0;
    const char* end = cap + std::strlen(cap);
    auto [ptr, ec] = std::from_chars(cap, end, value);
    if (ec == std::errc{} && ptr == end && value > 0)
      workers = std::min(workers, value);
  }
  return workers;
}

} // namespace fishlab
