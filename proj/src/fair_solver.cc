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

#include "fairsub/fair_solver.h"

#include <chrono>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

#include "fairsub/matroid.h"
#include "fairsub/oracle.h"

namespace fairsub {

namespace {

enum class Route { kLow, kHigh, kCappedLow, kCappedHigh };

Route PickRoute(const FairnessSpec& spec) {
  // alpha == 1/2 goes to the low branch; its guarantee covers the boundary.
  bool high = spec.alpha > Fraction(1, 2);
  if (spec.cap.has_value()) return high ? Route::kCappedHigh : Route::kCappedLow;
  return high ? Route::kHigh : Route::kLow;
}

const char* RouteName(Route route) {
  switch (route) {
    case Route::kLow: return "low-alpha";
    case Route::kHigh: return "high-alpha";
    case Route::kCappedLow: return "capped-low-alpha";
    case Route::kCappedHigh: return "capped-high-alpha";
  }
  return "";
}

// The routed relaxation and repair parameters, before any solving.
struct PlanSkeleton {
  Route route = Route::kLow;
  ItemSet universe;                    // items of groups that may contribute
  std::vector<int> fill_targets;       // per group; zero for dropped groups
  std::unique_ptr<Matroid> matroid;    // relaxed-problem constraint
  bool complemented = false;           // final = universe \ filled
  int dropped_groups = 0;
  // Lazy capped-high-alpha: top up to this many selected items, respecting
  // per-group ceilings, instead of filling every group to its ceiling.
  std::optional<int> global_fill_min;
  std::vector<int> fill_ceilings;
};

void RequireFeasible(const Groups& groups, const FairnessSpec& spec) {
  FeasibilityCheck check = CheckFeasibility(groups, spec);
  if (!check.feasible) throw InfeasibleError(check.reason);
}

PlanSkeleton BuildSkeleton(const Groups& groups, const FairnessSpec& spec, Route route,
                           bool lazy_fill) {
  const int m = groups.group_count();
  GroupBounds bounds = ComputeGroupBounds(groups, spec);

  PlanSkeleton plan;
  plan.route = route;

  // Groups whose upper bound is zero cannot contribute items. Solving on the
  // remaining ground set keeps the complement transform and the sampling
  // analysis exact; their items are reported unselected.
  for (int g = 0; g < m; ++g) {
    if (bounds.upper[g] > 0) {
      plan.universe = plan.universe.Union(groups.Members(g));
    } else {
      ++plan.dropped_groups;
    }
  }

  plan.fill_targets.assign(m, 0);
  switch (route) {
    case Route::kLow: {
      plan.matroid = std::make_unique<PartitionMatroid>(groups, bounds.upper);
      plan.fill_targets = bounds.lower;
      plan.complemented = false;
      break;
    }
    case Route::kCappedLow: {
      plan.matroid = std::make_unique<FairReductionMatroid>(groups, bounds.lower,
                                                            bounds.upper, *spec.cap);
      plan.fill_targets = bounds.lower;
      plan.complemented = false;
      break;
    }
    case Route::kHigh:
    case Route::kCappedHigh: {
      GroupBounds flipped = FlipBounds(groups, bounds);
      std::vector<int> caps(m, 0);
      for (int g = 0; g < m; ++g) {
        if (bounds.upper[g] == 0) continue;  // dropped from the universe
        caps[g] = flipped.upper[g];
        if (route == Route::kHigh || lazy_fill) {
          plan.fill_targets[g] = flipped.lower[g];
        } else {
          // Every group is topped up to its flipped ceiling, so the final
          // complement takes exactly lower_i items from each group.
          plan.fill_targets[g] = flipped.upper[g];
        }
      }
      if (route == Route::kCappedHigh && lazy_fill) {
        plan.global_fill_min = std::max(0, plan.universe.Size() - *spec.cap);
        plan.fill_ceilings = caps;
      }
      plan.matroid = std::make_unique<PartitionMatroid>(groups, std::move(caps));
      plan.complemented = true;
      break;
    }
  }
  return plan;
}

// A skeleton plus the inner solver's relaxed solution.
struct RelaxedPlan {
  PlanSkeleton skeleton;
  ItemSet relaxed;
  std::shared_ptr<SubmodularOracle> relaxed_oracle;  // set on complemented routes
};

RelaxedPlan BuildPlan(const Instance& inst, const FairnessSpec& spec, Route route,
                      const InnerSolver& solver, Rng& rng, bool lazy_fill) {
  RelaxedPlan plan;
  plan.skeleton = BuildSkeleton(inst.groups, spec, route, lazy_fill);
  if (plan.skeleton.complemented) {
    plan.relaxed_oracle = MakeComplementOracle(inst.objective, plan.skeleton.universe);
  }
  const SubmodularOracle& oracle =
      plan.skeleton.complemented ? *plan.relaxed_oracle : *inst.objective;
  plan.relaxed = solver.Solve(oracle, *plan.skeleton.matroid, plan.skeleton.universe, rng);
  return plan;
}

struct FillOutcome {
  ItemSet members;
  int forced_fills = 0;
};

FillOutcome ExecuteFill(const RelaxedPlan& plan, const Groups& groups, Rng& rng) {
  const PlanSkeleton& sk = plan.skeleton;
  FillOutcome out;
  BackupPlan backup = PlanBackup(plan.relaxed, sk.fill_targets, groups, rng);
  for (const GroupBackup& gb : backup.groups) {
    ItemSet pool = groups.Members(gb.group).Minus(plan.relaxed);
    if (gb.deficit == pool.Size()) ++out.forced_fills;
  }
  ItemSet filled = plan.relaxed.Union(backup.Union());

  if (sk.global_fill_min.has_value()) {
    std::vector<int> counts = groups.CountPerGroup(filled);
    while (filled.Size() < *sk.global_fill_min) {
      ItemSet eligible;
      for (int g = 0; g < groups.group_count(); ++g) {
        if (counts[g] < sk.fill_ceilings[g]) {
          eligible = eligible.Union(groups.Members(g).Intersect(sk.universe).Minus(filled));
        }
      }
      if (eligible.Empty()) {
        throw std::logic_error("global top-up ran out of eligible items");
      }
      ItemSet pick = rng.SampleWithoutReplacement(eligible, 1);
      filled = filled.Union(pick);
      ++counts[groups.GroupOf(pick.ToVector()[0])];
    }
  }

  out.members = sk.complemented ? sk.universe.Minus(filled) : filled;
  return out;
}

Solution RunOnce(const Instance& inst, const FairnessSpec& spec, Route route,
                 const InnerSolver& solver, Rng& rng, bool lazy_fill) {
  RequireFeasible(inst.groups, spec);
  RelaxedPlan plan = BuildPlan(inst, spec, route, solver, rng, lazy_fill);
  FillOutcome fill = ExecuteFill(plan, inst.groups, rng);
  return {fill.members, inst.objective->Eval(fill.members)};
}

void CheckRoutePreconditions(const FairnessSpec& spec, Route route) {
  Route actual = PickRoute(spec);
  if (actual != route) {
    throw std::invalid_argument(std::string("spec routes to ") + RouteName(actual) +
                                ", not " + RouteName(route));
  }
}

}  // namespace

ItemSet BackupPlan::Union() const {
  ItemSet u;
  for (const GroupBackup& g : groups) u = u.Union(g.sampled);
  return u;
}

BackupPlan PlanBackup(ItemSet a, const std::vector<int>& targets, const Groups& groups,
                      Rng& rng) {
  if (static_cast<int>(targets.size()) != groups.group_count()) {
    throw std::invalid_argument("PlanBackup: one target per group required");
  }
  BackupPlan plan;
  for (int g = 0; g < groups.group_count(); ++g) {
    int have = a.CountIn(groups.Members(g));
    int deficit = targets[g] - have;
    if (deficit <= 0) continue;
    ItemSet pool = groups.Members(g).Minus(a);
    if (deficit > pool.Size()) {
      throw std::invalid_argument("PlanBackup: group " + std::to_string(g) +
                                  " lacks items to reach its target");
    }
    plan.groups.push_back({g, deficit, rng.SampleWithoutReplacement(pool, deficit)});
  }
  return plan;
}

ItemSet BackupFill(ItemSet a, const std::vector<int>& targets, const Groups& groups,
                   Rng& rng) {
  return a.Union(PlanBackup(a, targets, groups, rng).Union());
}

FillSpec RoutedFillSpec(const Groups& groups, const FairnessSpec& spec) {
  spec.Validate(groups.n());
  RequireFeasible(groups, spec);
  Route route = PickRoute(spec);
  PlanSkeleton sk = BuildSkeleton(groups, spec, route, /*lazy_fill=*/false);
  FillSpec fill;
  fill.universe = sk.universe;
  fill.targets = std::move(sk.fill_targets);
  fill.relaxed_matroid = std::move(sk.matroid);
  fill.complemented = sk.complemented;
  fill.probability_bound =
      (route == Route::kHigh || route == Route::kCappedHigh) ? 2.0 / 3.0 : 0.5;
  return fill;
}

Solution FairLowAlpha(const Instance& inst, const FairnessSpec& spec,
                      const InnerSolver& solver, Rng& rng) {
  CheckRoutePreconditions(spec, Route::kLow);
  return RunOnce(inst, spec, Route::kLow, solver, rng, false);
}

Solution FairHighAlpha(const Instance& inst, const FairnessSpec& spec,
                       const InnerSolver& solver, Rng& rng) {
  CheckRoutePreconditions(spec, Route::kHigh);
  return RunOnce(inst, spec, Route::kHigh, solver, rng, false);
}

Solution FairCappedLowAlpha(const Instance& inst, const FairnessSpec& spec,
                            const InnerSolver& solver, Rng& rng) {
  CheckRoutePreconditions(spec, Route::kCappedLow);
  return RunOnce(inst, spec, Route::kCappedLow, solver, rng, false);
}

Solution FairCappedHighAlpha(const Instance& inst, const FairnessSpec& spec,
                             const InnerSolver& solver, Rng& rng, bool lazy_fill) {
  CheckRoutePreconditions(spec, Route::kCappedHigh);
  return RunOnce(inst, spec, Route::kCappedHigh, solver, rng, lazy_fill);
}

SolveReport Solve(const Instance& inst, const FairnessSpec& spec,
                  const FairSolveConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("Solve: trials must be >= 1");
  spec.Validate(inst.n());
  RequireFeasible(inst.groups, spec);

  const auto start = std::chrono::steady_clock::now();
  const uint64_t calls_before = inst.objective->calls();

  std::unique_ptr<InnerSolver> solver = MakeInnerSolver(config.solver, config.epsilon);
  Route route = PickRoute(spec);

  SolveReport report;
  report.algorithm = RouteName(route);
  report.inner_solver = solver->name();
  report.gamma = solver->declared_gamma();
  report.trials.reserve(config.trials);

  // A deterministic inner solver yields the same relaxed solution on every
  // trial, so it is solved once and only the repair step is resampled; the
  // per-trial output distribution is unchanged.
  std::optional<RelaxedPlan> shared_plan;
  if (solver->deterministic()) {
    Rng rng(config.seed);
    shared_plan = BuildPlan(inst, spec, route, *solver, rng, config.lazy_fill);
  }

  for (int t = 0; t < config.trials; ++t) {
    Rng rng = Rng::ForTrial(config.seed, static_cast<uint64_t>(t));
    const RelaxedPlan* plan = nullptr;
    std::optional<RelaxedPlan> own_plan;
    if (shared_plan.has_value()) {
      plan = &*shared_plan;
    } else {
      own_plan = BuildPlan(inst, spec, route, *solver, rng, config.lazy_fill);
      plan = &*own_plan;
    }
    report.dropped_groups = plan->skeleton.dropped_groups;

    FillOutcome fill = ExecuteFill(*plan, inst.groups, rng);
    TrialOutcome outcome;
    outcome.members = fill.members;
    outcome.value = inst.objective->Eval(fill.members);
    outcome.fair = IsFair(inst.groups, spec, fill.members);
    report.forced_fills = std::max(report.forced_fills, fill.forced_fills);
    report.trials.push_back(outcome);
  }

  report.all_fair = true;
  double mean = 0;
  double m2 = 0;
  for (int t = 0; t < config.trials; ++t) {
    const TrialOutcome& outcome = report.trials[t];
    report.all_fair = report.all_fair && outcome.fair;
    double delta = outcome.value - mean;
    mean += delta / (t + 1);
    m2 += delta * (outcome.value - mean);
  }
  report.mean = mean;
  report.stderr_of_mean =
      config.trials > 1 ? std::sqrt(m2 / (config.trials - 1) / config.trials) : 0.0;

  int pick = 0;
  if (config.best_of) {
    for (int t = 1; t < config.trials; ++t) {
      if (report.trials[t].value > report.trials[pick].value) pick = t;
    }
  }
  report.solution = {report.trials[pick].members, report.trials[pick].value};

  report.oracle_calls = inst.objective->calls() - calls_before;
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace fairsub
