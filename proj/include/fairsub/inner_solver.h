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

#ifndef FAIRSUB_INNER_SOLVER_H_
#define FAIRSUB_INNER_SOLVER_H_

#include <memory>
#include <optional>
#include <string>

#include "fairsub/itemset.h"
#include "fairsub/matroid.h"
#include "fairsub/oracle.h"
#include "fairsub/rng.h"

namespace fairsub {

// Black-box solver for submodular maximization under one matroid constraint.
// The fairness algorithms treat this as an exchangeable component: any
// gamma-approximate implementation yields gamma/2 or gamma/3 end-to-end
// guarantees. Solvers are stateless between calls; each call owns its RNG.
class InnerSolver {
 public:
  virtual ~InnerSolver() = default;

  virtual std::string name() const = 0;

  // Approximation ratio in (0,1] when known, nullopt for heuristics.
  virtual std::optional<double> declared_gamma() const = 0;

  // True when the output is independent of the RNG stream.
  virtual bool deterministic() const = 0;

  // Returns an independent subset of `candidates`.
  virtual ItemSet Solve(const SubmodularOracle& oracle, const Matroid& matroid,
                        ItemSet candidates, Rng& rng) const = 0;
};

// Exhaustive search over independent sets, pruned by downward closure.
// gamma = 1. Ties broken toward the lexicographically smallest maximizer.
// Rejects more than 20 candidate items.
class ExactSolver : public InnerSolver {
 public:
  static constexpr int kMaxItems = 20;

  std::string name() const override { return "exact"; }
  std::optional<double> declared_gamma() const override { return 1.0; }
  bool deterministic() const override { return true; }
  ItemSet Solve(const SubmodularOracle& oracle, const Matroid& matroid,
                ItemSet candidates, Rng& rng) const override;
};

// Add/drop/swap local search accepting only moves that beat the current
// value by a factor of (1 + epsilon); terminates because accepted moves grow
// the value geometrically. Scan order is reshuffled each pass, so distinct
// seeds can reach distinct local optima.
class LocalSearchSolver : public InnerSolver {
 public:
  explicit LocalSearchSolver(double epsilon = 1e-4);

  std::string name() const override { return "local-search"; }
  std::optional<double> declared_gamma() const override { return std::nullopt; }
  bool deterministic() const override { return false; }
  ItemSet Solve(const SubmodularOracle& oracle, const Matroid& matroid,
                ItemSet candidates, Rng& rng) const override;

 private:
  double epsilon_;
};

// Randomized greedy: each step picks uniformly among the top-k feasible
// additions by marginal gain (k = remaining greedy-extension rank, at least
// 1) and stops when no feasible addition has positive gain.
class RandomGreedySolver : public InnerSolver {
 public:
  std::string name() const override { return "random-greedy"; }
  std::optional<double> declared_gamma() const override { return std::nullopt; }
  bool deterministic() const override { return false; }
  ItemSet Solve(const SubmodularOracle& oracle, const Matroid& matroid,
                ItemSet candidates, Rng& rng) const override;
};

// Factory over the configuration names "exact", "local-search",
// "random-greedy". Throws std::invalid_argument for unknown names.
std::unique_ptr<InnerSolver> MakeInnerSolver(const std::string& name,
                                             double epsilon = 1e-4);

}  // namespace fairsub

#endif  // FAIRSUB_INNER_SOLVER_H_
