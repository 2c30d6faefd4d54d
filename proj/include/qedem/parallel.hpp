#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qedem {

// Worker count for data-parallel loops: the QEDEM_THREADS environment
// variable when set (clamped to >= 1), otherwise std::thread::hardware_concurrency.
int worker_count();

// Runs fn(i) for i in [0, count) on worker_count() threads, static contiguous
// partition. Iterations must be independent; results are deterministic as
// long as each index writes only its own slots. The first exception thrown
// by any worker is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count > 0 ? count : 1);
  if (workers <= 1 || count < 256) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    pool.emplace_back([&, w, begin, end]() {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace qedem
