// SPDX-License-Identifier: Apache-2.0
//
// spjc-sim: beamforming simulator for secure precise jamming and communication
// Copyright (C) 2026 The spjc-sim Authors
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

// Deterministic fork-join helper. Work items are indexed; callers write results by index so
// the outcome never depends on scheduling.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace spjc::detail
{
    inline unsigned worker_count(std::size_t items)
    {
        unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        if (const char *env = std::getenv("SPJC_THREADS"))
            hw = std::max(1, std::atoi(env));
        return static_cast<unsigned>(std::min<std::size_t>(hw, items));
    }

    template <typename Fn>
    void parallel_for(std::size_t count, Fn &&fn)
    {
        const unsigned workers = worker_count(count);
        if (workers <= 1)
        {
            for (std::size_t i = 0; i < count; ++i)
                fn(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto body = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;)
            {
                try
                {
                    fn(i);
                }
                catch (...)
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next.store(count);
                }
            }
        };
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 1; t < workers; ++t)
                pool.emplace_back(body);
            body();
        }
        if (failure)
            std::rethrow_exception(failure);
    }
}
