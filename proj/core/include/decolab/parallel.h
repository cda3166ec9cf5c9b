// Copyright 2026 The decolab Authors.
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

#ifndef DECOLAB_PARALLEL_H_
#define DECOLAB_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace decolab {

/// Environment variable capping worker threads; 0 or unset means one per
/// hardware thread.
inline constexpr const char* kThreadsEnvVar = "DECOLAB_THREADS";

/// Thread count implied by a DECOLAB_THREADS value (nullptr when unset).
/// Unparsable values fall back to auto.
unsigned thread_count_from(const char* env_value);
/// Thread count from the current environment.
unsigned default_thread_count();

/// Runs fn(i) for every i in [0, n) on up to `threads` threads (0 = auto).
/// If any call throws, the exception from the lowest index is rethrown after
/// all workers finish.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace decolab

#endif  // DECOLAB_PARALLEL_H_
