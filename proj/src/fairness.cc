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

#include "fairsub/fairness.h"

#include <numeric>

namespace fairsub {

void FairnessSpec::Validate(int n) const {
  if (alpha < 0 || alpha > 1 || beta < 0 || beta > 1) {
    throw std::invalid_argument("FairnessSpec: alpha and beta must lie in [0,1]");
  }
  if (alpha > beta) {
    throw std::invalid_argument("FairnessSpec: alpha must not exceed beta");
  }
  if (cap.has_value() && (*cap < 0 || *cap > n)) {
    throw std::invalid_argument("FairnessSpec: cap must lie in [0,n]");
  }
}

int GroupBounds::SumLower() const {
  return std::accumulate(lower.begin(), lower.end(), 0);
}

GroupBounds ComputeGroupBounds(const Groups& groups, const FairnessSpec& spec) {
  spec.Validate(groups.n());
  GroupBounds b;
  b.lower.reserve(groups.group_count());
  b.upper.reserve(groups.group_count());
  for (int g = 0; g < groups.group_count(); ++g) {
    b.lower.push_back(FloorScale(spec.alpha, groups.GroupSize(g)));
    b.upper.push_back(FloorScale(spec.beta, groups.GroupSize(g)));
  }
  return b;
}

GroupBounds FlipBounds(const Groups& groups, const GroupBounds& bounds) {
  GroupBounds flipped;
  flipped.lower.reserve(groups.group_count());
  flipped.upper.reserve(groups.group_count());
  for (int g = 0; g < groups.group_count(); ++g) {
    flipped.lower.push_back(groups.GroupSize(g) - bounds.upper[g]);
    flipped.upper.push_back(groups.GroupSize(g) - bounds.lower[g]);
  }
  return flipped;
}

GroupBounds FlipBounds(const Groups& groups, const FairnessSpec& spec) {
  return FlipBounds(groups, ComputeGroupBounds(groups, spec));
}

bool WithinBounds(const Groups& groups, const GroupBounds& bounds, ItemSet s) {
  for (int g = 0; g < groups.group_count(); ++g) {
    int count = s.CountIn(groups.Members(g));
    if (count < bounds.lower[g] || count > bounds.upper[g]) return false;
  }
  return true;
}

bool IsFair(const Groups& groups, const FairnessSpec& spec, ItemSet s) {
  if (spec.cap.has_value() && s.Size() > *spec.cap) return false;
  return WithinBounds(groups, ComputeGroupBounds(groups, spec), s);
}

FeasibilityCheck CheckFeasibility(const Groups& groups, const FairnessSpec& spec) {
  spec.Validate(groups.n());
  if (!spec.cap.has_value()) return {true, ""};
  int sum_lower = ComputeGroupBounds(groups, spec).SumLower();
  if (sum_lower > *spec.cap) {
    return {false, "group lower bounds sum to " + std::to_string(sum_lower) +
                       " which exceeds the cap " + std::to_string(*spec.cap)};
  }
  return {true, ""};
}

}  // namespace fairsub
