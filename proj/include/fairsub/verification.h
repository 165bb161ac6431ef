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

#ifndef FAIRSUB_VERIFICATION_H_
#define FAIRSUB_VERIFICATION_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fairsub/fair_solver.h"
#include "fairsub/fairness.h"
#include "fairsub/instance.h"
#include "fairsub/itemset.h"
#include "fairsub/rng.h"

namespace fairsub {

// Ground-truth optima by exhaustive enumeration, and the statistical checks
// that turn the expected-value guarantees into pass/fail verdicts.

struct BruteForceResult {
  double opt_value = 0.0;
  ItemSet opt_set;          // lexicographically smallest maximizer
  uint64_t feasible_count = 0;
};

inline constexpr int kBruteForceMaxItems = 20;

// Exact optimum of the fair problem. Enumerates with group-composition
// pruning; every feasible set is visited exactly once. Requires n <= 20;
// throws InfeasibleError when no feasible set exists (possible only with a
// cap).
BruteForceResult BruteForceOpt(const Instance& inst, const FairnessSpec& spec);

// Exact optimum over arbitrary per-group bounds with optional global size
// limits; the general engine behind BruteForceOpt, exposed so the flipped
// and relaxed formulations can be enumerated directly.
BruteForceResult BruteForceOverBounds(const Groups& groups, const SubmodularOracle& oracle,
                                      const GroupBounds& bounds,
                                      std::optional<int> max_size = std::nullopt,
                                      std::optional<int> min_size = std::nullopt);

// Exact optimum over the independent sets of a matroid, n <= 20.
BruteForceResult BruteForceOverMatroid(const Matroid& matroid,
                                       const SubmodularOracle& oracle);

struct Expectation {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  int trials = 0;
};

// Sample mean and standard error of `run` over independent trial RNG
// streams derived from the master seed. Welford accumulation; trials >= 2.
Expectation EstimateExpectation(const std::function<double(Rng&)>& run, int trials,
                                uint64_t master_seed);

struct RatioReport {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  int trials = 0;
  double opt_value = 0.0;
  double bound = 0.0;  // required fraction of opt
  bool pass = false;   // mean >= bound * opt - 3 * stderr
};

// Statistical verdict for an expected-approximation guarantee. Requires
// trials >= 30 so the normal approximation behind the 3-standard-error
// margin is meaningful.
RatioReport CheckExpectedRatio(const std::function<double(Rng&)>& run, int trials,
                               uint64_t master_seed, double opt_value, double bound);

struct RandomSubsetReport {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  double bound = 0.0;  // (1 - p) * f(empty)
  bool pass = false;
};

// Samples S by including each item independently with probability p and
// checks E[f(S)] >= (1-p) * f(empty) - 3 * stderr. Vacuous when f(empty)=0
// (every cut function); use table fixtures with a positive base there.
RandomSubsetReport CheckRandomSubsetLemma(const SubmodularOracle& oracle, double p,
                                          int trials, uint64_t seed);

struct BackupProbabilityReport {
  std::vector<double> frequency;     // per item, over the fill randomness
  std::vector<int> deterministic;    // items always added (deficit == pool)
  double bound = 0.0;                // 1/2 for alpha <= 1/2, else 2/3
  double margin = 0.0;               // 3 * sqrt(bound*(1-bound)/trials)
  bool analytic_ok = false;          // d_i/|V_i \ A| <= bound per group
  bool empirical_ok = false;         // frequency <= bound + margin per item
  bool pass = false;
};

// Monte Carlo audit of the backup-sampling probability bound. `relaxed`
// must be a valid solution of the relaxed (matroid) problem the routed
// algorithm solves; the fill targets and bound are derived from the same
// routing. Groups of size one are excluded from the bound and reported in
// `deterministic` instead: when deficient they are filled with certainty,
// which the probability analysis treats as a separate, non-random case.
BackupProbabilityReport CheckBackupProbability(const Instance& inst,
                                               const FairnessSpec& spec, ItemSet relaxed,
                                               int trials, uint64_t seed);

}  // namespace fairsub

#endif  // FAIRSUB_VERIFICATION_H_
