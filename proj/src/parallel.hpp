#pragma once

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace niho3 {

// Worker-count resolution: explicit request wins, then the NIHO3_WORKERS
// environment variable, then the hardware concurrency.
inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("NIHO3_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Splits [0, count) into `workers` contiguous chunks and runs
// fn(chunk_index, begin, end) on one thread per chunk. Callers merge
// per-chunk results in chunk order, so the outcome is identical for any
// worker count. Exceptions from workers are rethrown after joining.
template <typename Fn>
void run_partitioned(int64_t count, int workers, Fn&& fn) {
  int w = workers < 1 ? 1 : workers;
  if (static_cast<int64_t>(w) > count) w = count < 1 ? 1 : static_cast<int>(count);
  if (w == 1) {
    fn(0, int64_t{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(w));
  threads.reserve(static_cast<size_t>(w));
  for (int i = 0; i < w; ++i) {
    int64_t begin = count * i / w;
    int64_t end = count * (i + 1) / w;
    threads.emplace_back([&fn, &errors, i, begin, end] {
      try {
        fn(i, begin, end);
      } catch (...) {
        errors[static_cast<size_t>(i)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace niho3
