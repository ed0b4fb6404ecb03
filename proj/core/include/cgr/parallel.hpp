#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace cgr {

// Worker threads for the heavier exhaustive scans, from the CGR_WORKERS
// environment variable. Defaults to 1, clamped to [1, 64].
int worker_count();

// Runs check(i) for i in [0, n) and returns the lowest failing index with
// its witness, or nullopt when all pass. check returns nullopt on pass.
// With several workers the range is chunked; the merged result is still
// the lowest index, so witnesses never depend on the worker count.
std::optional<std::pair<long, std::string>> first_failure_scan(
    long n, const std::function<std::optional<std::string>(long)>& check);

}  // namespace cgr
