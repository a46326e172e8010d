// Copyright 2026 dqmforge developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace dqmforge::detail {

/// Run fn(0) .. fn(count - 1), possibly concurrently. Each index is handled
/// exactly once; callers that write results into index i of a preallocated
/// buffer get schedule-independent output. The first exception thrown by any
/// fn is rethrown on the calling thread.
inline void parallel_for(int count, int num_threads, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    if (num_threads <= 0) num_threads = static_cast<int>(std::thread::hardware_concurrency());
    if (num_threads < 1) num_threads = 1;
    if (num_threads > count) num_threads = count;

    if (num_threads == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;

    const auto worker = [&]() {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> guard(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> workers;
    workers.reserve(num_threads);
    for (int t = 0; t < num_threads; ++t) workers.emplace_back(worker);
    for (auto& thread : workers) thread.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace dqmforge::detail
