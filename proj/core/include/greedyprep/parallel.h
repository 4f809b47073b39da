// Copyright 2026 The greedyprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREEDYPREP_PARALLEL_H
#define GREEDYPREP_PARALLEL_H

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace greedyprep {

/// Environment variable consulted for the default worker count.
inline constexpr const char *kWorkersEnvVar = "GREEDYPREP_WORKERS";

/// Worker count from GREEDYPREP_WORKERS if set and positive, otherwise hardware concurrency (at least 1).
size_t default_worker_count();

/// Calls body(i) for every i in [0, n) on up to `workers` threads. Work is handed out by index, so callers
/// that write results into slot i get the same output for any worker count. The first exception thrown by
/// any call is rethrown after all threads join.
template <typename Body>
void parallel_for(size_t n, size_t workers, Body &&body) {
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; i++) {
            body(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) {
                return;
            }
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed = true;
            }
        }
    };
    std::vector<std::thread> threads;
    size_t count = std::min(workers, n);
    threads.reserve(count - 1);
    for (size_t t = 1; t < count; t++) {
        threads.emplace_back(run);
    }
    run();
    for (auto &t : threads) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace greedyprep

#endif
