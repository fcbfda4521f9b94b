// Copyright 2026 The Authors.
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

#pragma once

#include <vector>

#include "hkom/oriented_matroid.hpp"

namespace hkom {

/// M / contracted \ deleted, both given as positions of the parent.
struct MinorSpec {
  ElementMask deleted = 0;
  ElementMask contracted = 0;
};

struct Minor {
  MinorSpec spec;
  OrientedMatroid matroid;
};

/// One representative per distinct minor of rank >= min_rank, ordered by
/// |A|+|B|, then A, then B. The trivial minor comes first when it qualifies.
/// Caches of every returned matroid are warmed.
std::vector<Minor> minors_with_rank_at_least(const OrientedMatroid& m, int min_rank);

}  // namespace hkom
