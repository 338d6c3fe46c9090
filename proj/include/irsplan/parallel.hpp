// irs-planner: SINR coverage and IRS placement toolkit
// Copyright (C) 2026 The irs-planner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace irsplan {

/// Thread budget for map and sweep evaluation. 0 means all hardware threads.
struct Execution {
    unsigned threads = 0;

    [[nodiscard]] unsigned resolved() const {
        if (threads != 0) return threads;
        return std::max(1u, std::thread::hardware_concurrency());
    }

    /// Reads IRS_PLANNER_THREADS; unset, empty, 0 or unparsable means all cores.
    static Execution from_environment() {
        Execution e;
        if (const char* v = std::getenv("IRS_PLANNER_THREADS"); v != nullptr && *v != '\0') {
            char* end = nullptr;
            const unsigned long n = std::strtoul(v, &end, 10);
            if (end != nullptr && *end == '\0') e.threads = static_cast<unsigned>(std::min(n, 4096ul));
        }
        return e;
    }
};

/// Calls body(i) for every i in [0, count), split into contiguous blocks over
/// worker threads. body must only write state owned by index i. The first
/// exception thrown by any worker is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, const Execution& exec, Body&& body) {
    const std::size_t workers = std::min<std::size_t>(exec.resolved(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto run_block = [&](std::size_t begin, std::size_t end) {
        try {
            for (std::size_t i = begin; i < end; ++i) body(i);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    const std::size_t block = (count + workers - 1) / workers;
    for (std::size_t w = 1; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * block);
        const std::size_t end = std::min(count, begin + block);
        pool.emplace_back(run_block, begin, end);
    }
    run_block(0, std::min(count, block));
    pool.clear(); // joins
    if (failure) std::rethrow_exception(failure);
}

} // namespace irsplan
