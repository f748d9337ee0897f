// Deterministic chunked parallelism: contiguous index ranges, results keyed
// by index, so output is identical for any worker count.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace ilab {

// requested > 0 wins; otherwise the INSTANTON_LAB_JOBS environment variable;
// otherwise 1
inline int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("INSTANTON_LAB_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

// fn(begin, end) on contiguous ranges; exceptions from workers are rethrown
template <class Fn>
void parallel_chunks(int jobs, std::size_t count, Fn&& fn) {
  if (count == 0) return;
  std::size_t nw = std::min<std::size_t>(std::max(jobs, 1), count);
  if (nw <= 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(nw);
  std::size_t base = count / nw, extra = count % nw, begin = 0;
  for (std::size_t w = 0; w < nw; ++w) {
    std::size_t len = base + (w < extra ? 1 : 0);
    workers.emplace_back([&fn, &errors, w, begin, len] {
      try {
        fn(begin, begin + len);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin += len;
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ilab
