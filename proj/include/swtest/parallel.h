// Copyright 2026 The swtest Authors
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

#ifndef SWTEST_PARALLEL_H_
#define SWTEST_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace swtest {

// Resolves a requested worker count: 0 means hardware concurrency.
size_t ResolveThreads(size_t requested);

// Calls fn(i) for every i in [0, count) on up to `threads` workers. Work is
// handed out by an atomic counter. The first exception thrown by any task is
// rethrown on the calling thread after all workers stop.
void ParallelFor(size_t count, size_t threads,
                 const std::function<void(size_t)>& fn);

}  // namespace swtest

#endif  // SWTEST_PARALLEL_H_
