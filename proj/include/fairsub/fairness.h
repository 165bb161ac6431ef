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

#ifndef FAIRSUB_FAIRNESS_H_
#define FAIRSUB_FAIRNESS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fairsub/fraction.h"
#include "fairsub/instance.h"
#include "fairsub/itemset.h"

namespace fairsub {

// Raised when a capped instance admits no feasible solution.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group-fairness parameters: a solution must take between floor(alpha*|V_i|)
// and floor(beta*|V_i|) items from each group V_i, and at most `cap` items in
// total when a cap is present.
struct FairnessSpec {
  Fraction alpha{0};
  Fraction beta{1};
  std::optional<int> cap;

  void Validate(int n) const;
};

// Per-group selection bounds [lower_i, upper_i].
struct GroupBounds {
  std::vector<int> lower;
  std::vector<int> upper;

  int SumLower() const;
};

// lower_i = floor(alpha * |V_i|), upper_i = floor(beta * |V_i|), exact
// integer arithmetic throughout.
GroupBounds ComputeGroupBounds(const Groups& groups, const FairnessSpec& spec);

// Mirror-image bounds [|V_i| - upper_i, |V_i| - lower_i]. A set T satisfies
// the flipped bounds iff its complement satisfies the originals; flipping
// twice returns the input.
GroupBounds FlipBounds(const Groups& groups, const GroupBounds& bounds);
GroupBounds FlipBounds(const Groups& groups, const FairnessSpec& spec);

// Per-group bounds check only (no cap).
bool WithinBounds(const Groups& groups, const GroupBounds& bounds, ItemSet s);

// Full feasibility for the fair problem: per-group bounds plus the global
// cap when present.
bool IsFair(const Groups& groups, const FairnessSpec& spec, ItemSet s);

struct FeasibilityCheck {
  bool feasible = true;
  std::string reason;
};

// Without a cap the fair problem is always feasible (take exactly lower_i
// from each group). With a cap it is feasible iff sum_i lower_i <= cap.
FeasibilityCheck CheckFeasibility(const Groups& groups, const FairnessSpec& spec);

}  // namespace fairsub

#endif  // FAIRSUB_FAIRNESS_H_
