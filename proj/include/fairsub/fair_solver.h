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

#ifndef FAIRSUB_FAIR_SOLVER_H_
#define FAIRSUB_FAIR_SOLVER_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fairsub/fairness.h"
#include "fairsub/inner_solver.h"
#include "fairsub/instance.h"
#include "fairsub/itemset.h"
#include "fairsub/matroid.h"
#include "fairsub/rng.h"

namespace fairsub {

// All four solvers share the same shape: relax the fair problem to a single
// matroid constraint, run an inner solver on it, then randomly fill
// per-group backup items to restore lower-bound feasibility. The high-alpha
// variants do this on the complemented objective and return the complement
// of what they built. Expected-value guarantees relative to the fair
// optimum, with a gamma-approximate inner solver:
//   alpha <= 1/2 (with or without cap):  gamma / 2
//   alpha >  1/2 (with or without cap):  gamma / 3

struct FairSolveConfig {
  std::string solver = "exact";
  double epsilon = 1e-4;  // local-search improvement threshold
  uint64_t seed = 0;
  int trials = 1;
  // Report the best trial as the headline solution instead of the first.
  // The mean remains the reported statistic either way, since the
  // guarantees hold in expectation.
  bool best_of = false;
  // Capped high-alpha only: fill deficient groups just to the flipped lower
  // bounds plus a global top-up, instead of filling every group to its
  // flipped cap. Ablation switch; the default follows the analyzed variant.
  bool lazy_fill = false;
};

// One group's random repair: d_i items drawn uniformly without replacement
// from the group members outside A.
struct GroupBackup {
  int group = 0;
  int deficit = 0;
  ItemSet sampled;
};

struct BackupPlan {
  std::vector<GroupBackup> groups;  // deficient groups only
  ItemSet Union() const;
};

// Samples, for each group whose intersection with `a` is below its target,
// target_i - |a intersect V_i| items uniformly from V_i \ a. Each outside
// item of a deficient group joins with probability exactly d_i / |V_i \ a|.
// Throws std::invalid_argument when a deficient group has too few outside
// items; that cannot happen for bounds derived from a feasible spec.
BackupPlan PlanBackup(ItemSet a, const std::vector<int>& targets, const Groups& groups,
                      Rng& rng);

// a union all sampled backup sets.
ItemSet BackupFill(ItemSet a, const std::vector<int>& targets, const Groups& groups,
                   Rng& rng);

// The repair-step parameters the routed algorithm would use: candidate
// universe, per-group fill targets, the relaxed-problem matroid, whether the
// final answer is the complement of the filled set, and the per-item
// sampling probability bound the analysis guarantees (1/2 for alpha <= 1/2,
// 2/3 otherwise). Exposed for the verification module's sampling audit.
struct FillSpec {
  ItemSet universe;
  std::vector<int> targets;
  std::unique_ptr<Matroid> relaxed_matroid;
  bool complemented = false;
  double probability_bound = 0.5;
};

FillSpec RoutedFillSpec(const Groups& groups, const FairnessSpec& spec);

// Single runs of the four algorithm variants. Preconditions: the spec is
// valid, routed correctly (alpha vs 1/2, cap presence), and feasible.
Solution FairLowAlpha(const Instance& inst, const FairnessSpec& spec,
                      const InnerSolver& solver, Rng& rng);
Solution FairHighAlpha(const Instance& inst, const FairnessSpec& spec,
                       const InnerSolver& solver, Rng& rng);
Solution FairCappedLowAlpha(const Instance& inst, const FairnessSpec& spec,
                            const InnerSolver& solver, Rng& rng);
Solution FairCappedHighAlpha(const Instance& inst, const FairnessSpec& spec,
                             const InnerSolver& solver, Rng& rng,
                             bool lazy_fill = false);

struct TrialOutcome {
  ItemSet members;
  double value = 0.0;
  bool fair = false;
};

struct SolveReport {
  std::string algorithm;  // low-alpha | high-alpha | capped-low-alpha | capped-high-alpha
  std::string inner_solver;
  std::optional<double> gamma;
  std::vector<TrialOutcome> trials;
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  Solution solution;       // first trial, or best trial under best_of
  bool all_fair = false;   // post-hoc feasibility audit over every trial
  int dropped_groups = 0;  // groups with upper bound 0, solved around
  int forced_fills = 0;    // max per-trial count of probability-1 backups
  uint64_t oracle_calls = 0;
  double wall_ms = 0.0;
};

// Routes to the algorithm selected by (alpha vs 1/2, cap presence), runs
// `trials` independent repetitions, audits every output against the
// original fairness constraints, and aggregates statistics. Trial RNG
// streams derive from (seed, trial index); a deterministic inner solver is
// run once and its relaxed solution reused across trials, which leaves the
// per-trial distribution unchanged. Throws InfeasibleError when the capped
// spec is infeasible.
SolveReport Solve(const Instance& inst, const FairnessSpec& spec,
                  const FairSolveConfig& config);

}  // namespace fairsub

#endif  // FAIRSUB_FAIR_SOLVER_H_
