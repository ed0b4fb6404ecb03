#include "cgr/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace cgr {

int worker_count() {
  const char* env = std::getenv("CGR_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env) return 1;
  return static_cast<int>(std::clamp(v, 1L, 64L));
}

std::optional<std::pair<long, std::string>> first_failure_scan(
    long n, const std::function<std::optional<std::string>(long)>& check) {
  const int workers = std::min<long>(worker_count(), std::max(n, 1L));
  if (workers <= 1) {
    for (long i = 0; i < n; ++i) {
      if (auto w = check(i)) return std::make_pair(i, std::move(*w));
    }
    return std::nullopt;
  }

  std::vector<std::optional<std::pair<long, std::string>>> results(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const long chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long lo = w * chunk;
    const long hi = std::min(n, lo + chunk);
    threads.emplace_back([&, w, lo, hi] {
      for (long i = lo; i < hi; ++i) {
        if (auto wit = check(i)) {
          results[w] = std::make_pair(i, std::move(*wit));
          return;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& r : results)
    if (r) return r;  // chunks are index ordered, first hit is the lowest
  return std::nullopt;
}

}  // namespace cgr
