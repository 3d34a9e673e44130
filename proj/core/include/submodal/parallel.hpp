// parallel.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBMODAL_PARALLEL_HPP
#define SUBMODAL_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace submodal {

/// Splits [0, total) into at most `jobs` contiguous chunks, runs
/// `chunk(lo, hi)` on each (worker threads when jobs > 1), and folds the
/// chunk results left to right with `merge`. Because the fold order is the
/// chunk order, the result is identical for any job count whenever `merge`
/// is associative over adjacent ranges — which keeps parallel runs
/// byte-reproducible.
template <typename R, typename ChunkFn, typename MergeFn>
R parallel_chunks(std::uint64_t total, int jobs, R init, ChunkFn chunk,
                  MergeFn merge) {
  if (jobs < 1) jobs = 1;
  std::uint64_t njobs = static_cast<std::uint64_t>(jobs);
  if (njobs > total) njobs = total == 0 ? 1 : total;
  if (njobs <= 1) {
    R only = chunk(std::uint64_t{0}, total);
    return merge(std::move(init), std::move(only));
  }
  std::vector<R> results(njobs, init);
  std::vector<std::thread> workers;
  workers.reserve(njobs);
  std::uint64_t per = total / njobs;
  std::uint64_t extra = total % njobs;
  std::uint64_t lo = 0;
  for (std::uint64_t w = 0; w < njobs; ++w) {
    std::uint64_t hi = lo + per + (w < extra ? 1 : 0);
    workers.emplace_back(
        [&results, &chunk, w, lo, hi] { results[w] = chunk(lo, hi); });
    lo = hi;
  }
  for (auto& t : workers) t.join();
  R acc = std::move(init);
  for (auto& r : results) acc = merge(std::move(acc), std::move(r));
  return acc;
}

}  // namespace submodal

#endif  // SUBMODAL_PARALLEL_HPP
