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

#ifndef FAIRSUB_INSTANCE_H_
#define FAIRSUB_INSTANCE_H_

#include <memory>
#include <vector>

#include "fairsub/itemset.h"
#include "fairsub/oracle.h"
#include "fairsub/rng.h"

namespace fairsub {

// Partition of {0,...,n-1} into m nonempty disjoint groups. Immutable.
class Groups {
 public:
  // group_of[e] is the group index of item e, in 0..m-1. Every group index
  // must be nonempty.
  explicit Groups(std::vector<int> group_of);

  int n() const { return static_cast<int>(group_of_.size()); }
  int group_count() const { return static_cast<int>(members_.size()); }
  int GroupOf(int e) const { return group_of_[e]; }
  ItemSet Members(int group) const { return members_[group]; }
  int GroupSize(int group) const { return sizes_[group]; }
  const std::vector<int>& group_of() const { return group_of_; }

  // |S intersect V_i| for each group i.
  std::vector<int> CountPerGroup(ItemSet s) const;

 private:
  std::vector<int> group_of_;
  std::vector<ItemSet> members_;
  std::vector<int> sizes_;
};

// Items 0..n-1 assigned round-robin to m groups, then the assignment is
// shuffled. Every group is nonempty provided m <= n.
Groups MakeRoundRobinGroups(int n, int m, Rng& rng);

// A ground set with its group partition and objective. The oracle's ground
// size must equal the partition's.
struct Instance {
  Instance(Groups g, std::shared_ptr<SubmodularOracle> obj);

  int n() const { return groups.n(); }

  Groups groups;
  std::shared_ptr<SubmodularOracle> objective;
};

// A candidate output: the selected items and their objective value.
struct Solution {
  ItemSet members;
  double value = 0.0;
};

}  // namespace fairsub

#endif  // FAIRSUB_INSTANCE_H_
