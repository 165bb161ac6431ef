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

#include "fairsub/instance.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fairsub {

Groups::Groups(std::vector<int> group_of) : group_of_(std::move(group_of)) {
  const int n = static_cast<int>(group_of_.size());
  if (n < 1 || n > kMaxGroundSize) {
    throw std::invalid_argument("Groups: ground size out of range [1,64]");
  }
  int m = 0;
  for (int g : group_of_) {
    if (g < 0) throw std::invalid_argument("Groups: negative group index");
    m = std::max(m, g + 1);
  }
  members_.assign(m, ItemSet());
  sizes_.assign(m, 0);
  for (int e = 0; e < n; ++e) {
    members_[group_of_[e]].Add(e);
    sizes_[group_of_[e]]++;
  }
  for (int g = 0; g < m; ++g) {
    if (sizes_[g] == 0) {
      throw std::invalid_argument("Groups: group " + std::to_string(g) + " is empty");
    }
  }
}

std::vector<int> Groups::CountPerGroup(ItemSet s) const {
  std::vector<int> counts(group_count());
  for (int g = 0; g < group_count(); ++g) counts[g] = s.CountIn(members_[g]);
  return counts;
}

Groups MakeRoundRobinGroups(int n, int m, Rng& rng) {
  if (m < 1 || m > n) {
    throw std::invalid_argument("MakeRoundRobinGroups: need 1 <= m <= n");
  }
  std::vector<int> group_of(n);
  for (int e = 0; e < n; ++e) group_of[e] = e % m;
  rng.Shuffle(group_of);
  return Groups(std::move(group_of));
}

Instance::Instance(Groups g, std::shared_ptr<SubmodularOracle> obj)
    : groups(std::move(g)), objective(std::move(obj)) {
  if (objective == nullptr) throw std::invalid_argument("Instance: null objective");
  if (objective->ground_size() != groups.n()) {
    throw std::invalid_argument("Instance: oracle ground size does not match groups");
  }
}

}  // namespace fairsub
