/*
   Copyright 2026 The manypoints Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MANYPOINTS_PARALLEL_HPP
#define MANYPOINTS_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace manypoints {

/**
 * Splits [begin, end) into `workers` contiguous chunks, maps each chunk on
 * its own thread and folds the partial results in chunk order.
 *
 * With an associative `merge` the result does not depend on `workers`.
 */
template <class T, class Map, class Merge>
T parallel_map_reduce(std::uint64_t begin, std::uint64_t end, unsigned workers, T init, Map map_chunk, Merge merge) {
    if (end <= begin) return init;
    const std::uint64_t total = end - begin;
    workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, total));
    if (workers == 1) return merge(std::move(init), map_chunk(begin, end));

    std::vector<T> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = begin + total * w / workers;
        const std::uint64_t hi = begin + total * (w + 1) / workers;
        threads.emplace_back([&, w, lo, hi] {
            try {
                partial[w] = map_chunk(lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    T acc = std::move(init);
    for (auto& part : partial) acc = merge(std::move(acc), std::move(part));
    return acc;
}

}  // namespace manypoints

#endif  // MANYPOINTS_PARALLEL_HPP
