// Copyright 2026 The sppr Authors.
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

#ifndef SPPR_COUNTERS_H_
#define SPPR_COUNTERS_H_

#include <cstdint>

namespace sppr {

// Work record of a single solver run. Every field only ever grows.
struct Counters {
  std::int64_t stages = 0;
  std::int64_t inner_iters = 0;
  // Stored matrix entries read, the unit vol() and ivol() are measured in.
  std::int64_t nnz_touched = 0;
  std::int64_t full_gradients = 0;
  std::int64_t restricted_gradients = 0;

  bool operator==(const Counters&) const = default;
};

}  // namespace sppr

#endif  // SPPR_COUNTERS_H_
