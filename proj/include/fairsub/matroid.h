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

#ifndef FAIRSUB_MATROID_H_
#define FAIRSUB_MATROID_H_

#include <optional>
#include <string>
#include <vector>

#include "fairsub/instance.h"
#include "fairsub/itemset.h"

namespace fairsub {

// Independence oracle. Implementations are immutable after construction;
// IsIndependent is pure and safe to call concurrently.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual int ground_size() const = 0;
  virtual bool IsIndependent(ItemSet s) const = 0;

  bool CanAdd(ItemSet s, int e) const { return IsIndependent(s.With(e)); }
  bool CanSwap(ItemSet s, int out, int in) const {
    return IsIndependent(s.Without(out).With(in));
  }

  // Size of a maximal independent subset of `candidates` containing `base`;
  // greedy extension is exact for matroids. Used as a rank estimate.
  int ExtensionRank(ItemSet base, ItemSet candidates) const;
};

// S independent iff |S intersect V_i| <= cap_i for every group.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(Groups groups, std::vector<int> caps);

  int ground_size() const override { return groups_.n(); }
  bool IsIndependent(ItemSet s) const override;

  const std::vector<int>& caps() const { return caps_; }

 private:
  Groups groups_;
  std::vector<int> caps_;
};

// S independent iff |S intersect V_i| <= upper_i for every group and
// sum_i max(lower_i, |S intersect V_i|) <= cap: each group reserves lower_i
// slots of the global budget whether or not S fills them. Requires
// sum_i lower_i <= cap, otherwise the empty set itself would be dependent
// and the system is not a matroid.
class FairReductionMatroid : public Matroid {
 public:
  FairReductionMatroid(Groups groups, std::vector<int> lowers, std::vector<int> uppers,
                       int cap);

  int ground_size() const override { return groups_.n(); }
  bool IsIndependent(ItemSet s) const override;

 private:
  Groups groups_;
  std::vector<int> lowers_;
  std::vector<int> uppers_;
  int cap_;
};

struct MatroidAxiomWitness {
  std::string axiom;  // "downward-closure" or "exchange"
  ItemSet smaller;
  ItemSet larger;
};

struct MatroidAxiomResult {
  bool ok = true;
  std::optional<MatroidAxiomWitness> witness;
};

// Exhaustively verifies that the independence predicate defines a matroid:
// the empty set is independent, independence is preserved under removing one
// item, and for independent X, Y with |Y| = |X| + 1 some item of Y \ X can
// be added to X. (With downward closure, the one-step exchange implies the
// general exchange axiom.) Requires ground_size <= 14.
MatroidAxiomResult CheckMatroidAxioms(const Matroid& matroid);

}  // namespace fairsub

#endif  // FAIRSUB_MATROID_H_
