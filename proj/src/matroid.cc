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

#include "fairsub/matroid.h"

#include <stdexcept>
#include <utility>

namespace fairsub {

int Matroid::ExtensionRank(ItemSet base, ItemSet candidates) const {
  ItemSet current = base;
  int added = 0;
  ForEachItem(candidates.Minus(base), [&](int e) {
    if (IsIndependent(current.With(e))) {
      current.Add(e);
      ++added;
    }
  });
  return added;
}

PartitionMatroid::PartitionMatroid(Groups groups, std::vector<int> caps)
    : groups_(std::move(groups)), caps_(std::move(caps)) {
  if (static_cast<int>(caps_.size()) != groups_.group_count()) {
    throw std::invalid_argument("PartitionMatroid: one cap per group required");
  }
  for (int k : caps_) {
    if (k < 0) throw std::invalid_argument("PartitionMatroid: negative cap");
  }
}

bool PartitionMatroid::IsIndependent(ItemSet s) const {
  for (int g = 0; g < groups_.group_count(); ++g) {
    if (s.CountIn(groups_.Members(g)) > caps_[g]) return false;
  }
  return true;
}

FairReductionMatroid::FairReductionMatroid(Groups groups, std::vector<int> lowers,
                                           std::vector<int> uppers, int cap)
    : groups_(std::move(groups)),
      lowers_(std::move(lowers)),
      uppers_(std::move(uppers)),
      cap_(cap) {
  const int m = groups_.group_count();
  if (static_cast<int>(lowers_.size()) != m || static_cast<int>(uppers_.size()) != m) {
    throw std::invalid_argument("FairReductionMatroid: one bound pair per group required");
  }
  int reserved = 0;
  for (int g = 0; g < m; ++g) {
    if (lowers_[g] < 0 || uppers_[g] < lowers_[g]) {
      throw std::invalid_argument("FairReductionMatroid: need 0 <= lower <= upper");
    }
    reserved += lowers_[g];
  }
  if (reserved > cap_) {
    throw std::invalid_argument(
        "FairReductionMatroid: reserved slots exceed the cap; the empty set would be "
        "dependent and the system is not a matroid");
  }
}

bool FairReductionMatroid::IsIndependent(ItemSet s) const {
  int reserved_total = 0;
  for (int g = 0; g < groups_.group_count(); ++g) {
    int count = s.CountIn(groups_.Members(g));
    if (count > uppers_[g]) return false;
    reserved_total += count > lowers_[g] ? count : lowers_[g];
  }
  return reserved_total <= cap_;
}

MatroidAxiomResult CheckMatroidAxioms(const Matroid& matroid) {
  const int n = matroid.ground_size();
  if (n > 14) {
    throw std::invalid_argument("CheckMatroidAxioms: ground size must be <= 14");
  }
  if (!matroid.IsIndependent(ItemSet())) {
    return {false, MatroidAxiomWitness{"downward-closure", ItemSet(), ItemSet()}};
  }

  std::vector<std::vector<ItemSet>> by_size(n + 1);
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    ItemSet s(bits);
    if (matroid.IsIndependent(s)) by_size[s.Size()].push_back(s);
  }

  // Downward closure, one removal at a time.
  for (int size = 1; size <= n; ++size) {
    for (ItemSet s : by_size[size]) {
      bool violated = false;
      ForEachItem(s, [&](int e) {
        if (!matroid.IsIndependent(s.Without(e))) violated = true;
      });
      if (violated) {
        return {false, MatroidAxiomWitness{"downward-closure", ItemSet(), s}};
      }
    }
  }

  // One-step exchange; with downward closure this implies the general form.
  for (int size = 0; size < n; ++size) {
    for (ItemSet x : by_size[size]) {
      for (ItemSet y : by_size[size + 1]) {
        bool extended = false;
        ForEachItem(y.Minus(x), [&](int e) {
          if (!extended && matroid.IsIndependent(x.With(e))) extended = true;
        });
        if (!extended) {
          return {false, MatroidAxiomWitness{"exchange", x, y}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace fairsub
