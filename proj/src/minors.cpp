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

#include "hkom/minors.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace hkom {

std::vector<Minor> minors_with_rank_at_least(const OrientedMatroid& m, int min_rank) {
  const int n = m.size();
  const ElementMask ground = m.ground();
  std::vector<MinorSpec> specs;
  // rank(M/B\A) = rank(E\A) - rank(B)
  for (ElementMask b = 0;; b = (b - ground) & ground) {
    const int rb = m.set_rank(b);
    const ElementMask rest = ground & ~b;
    for (ElementMask a = 0;; a = (a - rest) & rest) {
      if (m.set_rank(ground & ~a) - rb >= min_rank) specs.push_back({a, b});
      if (a == rest) break;
    }
    if (b == ground) break;
  }
  std::sort(specs.begin(), specs.end(), [](const MinorSpec& x, const MinorSpec& y) {
    return std::make_tuple(popcount(x.deleted | x.contracted), x.deleted, x.contracted) <
           std::make_tuple(popcount(y.deleted | y.contracted), y.deleted, y.contracted);
  });
  std::set<std::pair<std::vector<int>, std::vector<SignVector>>> seen;
  std::vector<Minor> out;
  for (const auto& s : specs) {
    OrientedMatroid minor = m.contracted(s.contracted);
    // Positions of A inside the contraction.
    ElementMask a = 0;
    int pos = 0;
    for (int e = 0; e < n; ++e) {
      if (s.contracted & bit(e)) continue;
      if (s.deleted & bit(e)) a |= bit(pos);
      ++pos;
    }
    minor = minor.deleted(a);
    if (!seen.insert({minor.labels(), minor.covectors()}).second) continue;
    minor.warm_caches();
    out.push_back({s, std::move(minor)});
  }
  return out;
}

}  // namespace hkom
