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

#include "fairsub/verification.h"

#include <cmath>
#include <stdexcept>

#include "fairsub/matroid.h"

namespace fairsub {

namespace {

constexpr double kValueTol = 1e-12;

struct BestTracker {
  ItemSet set;
  double value = 0.0;
  bool any = false;

  void Consider(ItemSet s, double v) {
    if (!any || v > value + kValueTol) {
      set = s;
      value = v;
      any = true;
    } else if (v > value - kValueTol && LexLess(s, set)) {
      set = s;
    }
  }
};

}  // namespace

BruteForceResult BruteForceOverBounds(const Groups& groups, const SubmodularOracle& oracle,
                                      const GroupBounds& bounds, std::optional<int> max_size,
                                      std::optional<int> min_size) {
  const int n = groups.n();
  if (n > kBruteForceMaxItems) {
    throw std::invalid_argument("BruteForceOverBounds: n exceeds enumeration budget");
  }
  if (oracle.ground_size() != n) {
    throw std::invalid_argument("BruteForceOverBounds: oracle ground size mismatch");
  }
  const int m = groups.group_count();

  // suffix_in_group[idx][g]: items >= idx belonging to group g; lets the
  // search cut any branch that can no longer meet a lower bound.
  std::vector<std::vector<int>> suffix(n + 1, std::vector<int>(m, 0));
  for (int idx = n - 1; idx >= 0; --idx) {
    suffix[idx] = suffix[idx + 1];
    suffix[idx][groups.GroupOf(idx)]++;
  }

  BestTracker best;
  uint64_t feasible_count = 0;
  std::vector<int> counts(m, 0);
  ItemSet current;
  double current_value = oracle.Eval(ItemSet());

  auto dfs = [&](auto&& self, int idx, int size) -> void {
    if (idx == n) {
      ++feasible_count;
      best.Consider(current, current_value);
      return;
    }
    const int g = groups.GroupOf(idx);

    bool can_include = counts[g] + 1 <= bounds.upper[g];
    if (max_size.has_value() && size + 1 > *max_size) can_include = false;
    if (can_include) {
      double gain = oracle.Marginal(idx, current);
      current.Add(idx);
      counts[g]++;
      current_value += gain;
      self(self, idx + 1, size + 1);
      current.Remove(idx);
      counts[g]--;
      current_value -= gain;
    }

    bool can_exclude = counts[g] + suffix[idx + 1][g] >= bounds.lower[g];
    if (min_size.has_value() && size + (n - idx - 1) < *min_size) can_exclude = false;
    if (can_exclude) self(self, idx + 1, size);
  };
  dfs(dfs, 0, 0);

  if (feasible_count == 0) {
    throw InfeasibleError("no feasible set under the given bounds");
  }
  return {best.value, best.set, feasible_count};
}

BruteForceResult BruteForceOpt(const Instance& inst, const FairnessSpec& spec) {
  spec.Validate(inst.n());
  GroupBounds bounds = ComputeGroupBounds(inst.groups, spec);
  return BruteForceOverBounds(inst.groups, *inst.objective, bounds, spec.cap, std::nullopt);
}

BruteForceResult BruteForceOverMatroid(const Matroid& matroid,
                                       const SubmodularOracle& oracle) {
  const int n = matroid.ground_size();
  if (n > kBruteForceMaxItems) {
    throw std::invalid_argument("BruteForceOverMatroid: n exceeds enumeration budget");
  }
  BestTracker best;
  uint64_t independent_count = 0;
  ItemSet current;
  double current_value = oracle.Eval(ItemSet());

  auto dfs = [&](auto&& self, int idx) -> void {
    if (idx == n) {
      ++independent_count;
      best.Consider(current, current_value);
      return;
    }
    if (matroid.IsIndependent(current.With(idx))) {
      double gain = oracle.Marginal(idx, current);
      current.Add(idx);
      current_value += gain;
      self(self, idx + 1);
      current.Remove(idx);
      current_value -= gain;
    }
    self(self, idx + 1);
  };
  dfs(dfs, 0);
  return {best.value, best.set, independent_count};
}

Expectation EstimateExpectation(const std::function<double(Rng&)>& run, int trials,
                                uint64_t master_seed) {
  if (trials < 2) throw std::invalid_argument("EstimateExpectation: trials must be >= 2");
  double mean = 0;
  double m2 = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::ForTrial(master_seed, static_cast<uint64_t>(t));
    double value = run(rng);
    double delta = value - mean;
    mean += delta / (t + 1);
    m2 += delta * (value - mean);
  }
  double stderr_of_mean = std::sqrt(m2 / (trials - 1) / trials);
  return {mean, stderr_of_mean, trials};
}

RatioReport CheckExpectedRatio(const std::function<double(Rng&)>& run, int trials,
                               uint64_t master_seed, double opt_value, double bound) {
  if (trials < 30) {
    throw std::invalid_argument("CheckExpectedRatio: need trials >= 30 for a verdict");
  }
  Expectation est = EstimateExpectation(run, trials, master_seed);
  RatioReport report;
  report.mean = est.mean;
  report.stderr_of_mean = est.stderr_of_mean;
  report.trials = trials;
  report.opt_value = opt_value;
  report.bound = bound;
  report.pass = est.mean >= bound * opt_value - 3 * est.stderr_of_mean;
  return report;
}

RandomSubsetReport CheckRandomSubsetLemma(const SubmodularOracle& oracle, double p,
                                          int trials, uint64_t seed) {
  if (p < 0 || p > 1) {
    throw std::invalid_argument("CheckRandomSubsetLemma: p must lie in [0,1]");
  }
  if (trials < 2) throw std::invalid_argument("CheckRandomSubsetLemma: trials must be >= 2");
  const int n = oracle.ground_size();
  double empty_value = oracle.Eval(ItemSet());

  Expectation est = EstimateExpectation(
      [&](Rng& rng) {
        ItemSet s;
        for (int e = 0; e < n; ++e) {
          if (rng.Bernoulli(p)) s.Add(e);
        }
        return oracle.Eval(s);
      },
      trials, seed);

  RandomSubsetReport report;
  report.mean = est.mean;
  report.stderr_of_mean = est.stderr_of_mean;
  report.bound = (1 - p) * empty_value;
  report.pass = est.mean >= report.bound - 3 * est.stderr_of_mean;
  return report;
}

BackupProbabilityReport CheckBackupProbability(const Instance& inst,
                                               const FairnessSpec& spec, ItemSet relaxed,
                                               int trials, uint64_t seed) {
  if (trials < 2) {
    throw std::invalid_argument("CheckBackupProbability: trials must be >= 2");
  }
  const Groups& groups = inst.groups;
  FillSpec fill = RoutedFillSpec(groups, spec);
  if (!relaxed.SubsetOf(fill.universe) ||
      !fill.relaxed_matroid->IsIndependent(relaxed)) {
    throw std::invalid_argument(
        "CheckBackupProbability: not a feasible relaxed-problem solution");
  }

  BackupProbabilityReport report;
  report.bound = fill.probability_bound;
  report.margin = 3 * std::sqrt(report.bound * (1 - report.bound) / trials);

  // Exact sampling probability per deficient group. Size-one groups fill
  // deterministically and sit outside the probabilistic guarantee.
  report.analytic_ok = true;
  for (int g = 0; g < groups.group_count(); ++g) {
    int have = relaxed.CountIn(groups.Members(g));
    int deficit = fill.targets[g] - have;
    if (deficit <= 0) continue;
    if (groups.GroupSize(g) == 1) {
      ForEachItem(groups.Members(g).Minus(relaxed),
                  [&](int e) { report.deterministic.push_back(e); });
      continue;
    }
    int pool = groups.GroupSize(g) - have;
    if (static_cast<double>(deficit) / pool > report.bound + kValueTol) {
      report.analytic_ok = false;
    }
  }

  const int n = groups.n();
  std::vector<int> hits(n, 0);
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::ForTrial(seed, static_cast<uint64_t>(t));
    BackupPlan plan = PlanBackup(relaxed, fill.targets, groups, rng);
    ForEachItem(plan.Union(), [&](int e) { hits[e]++; });
  }
  report.frequency.resize(n);
  report.empirical_ok = true;
  for (int e = 0; e < n; ++e) {
    report.frequency[e] = static_cast<double>(hits[e]) / trials;
    if (groups.GroupSize(groups.GroupOf(e)) == 1) continue;
    if (report.frequency[e] > report.bound + report.margin) report.empirical_ok = false;
  }
  report.pass = report.analytic_ok && report.empirical_ok;
  return report;
}

}  // namespace fairsub
