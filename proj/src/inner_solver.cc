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

#include "fairsub/inner_solver.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fairsub {

namespace {

constexpr double kValueTol = 1e-12;

}  // namespace

ItemSet ExactSolver::Solve(const SubmodularOracle& oracle, const Matroid& matroid,
                           ItemSet candidates, Rng&) const {
  std::vector<int> items = candidates.ToVector();
  if (static_cast<int>(items.size()) > kMaxItems) {
    throw std::invalid_argument("ExactSolver: more than 20 candidate items");
  }

  ItemSet best;
  double best_value = oracle.Eval(ItemSet());
  ItemSet current;
  double current_value = best_value;

  auto consider = [&](ItemSet s, double v) {
    if (v > best_value + kValueTol) {
      best = s;
      best_value = v;
    } else if (v > best_value - kValueTol && LexLess(s, best)) {
      best = s;
    }
  };

  // Depth-first over subsets of the candidates; the include branch is cut
  // whenever it leaves the independence family (downward closure makes the
  // cut safe). Values are maintained incrementally from marginals.
  auto dfs = [&](auto&& self, size_t idx) -> void {
    if (idx == items.size()) {
      consider(current, current_value);
      return;
    }
    int e = items[idx];
    if (matroid.IsIndependent(current.With(e))) {
      double gain = oracle.Marginal(e, current);
      current.Add(e);
      current_value += gain;
      self(self, idx + 1);
      current.Remove(e);
      current_value -= gain;
    }
    self(self, idx + 1);
  };
  dfs(dfs, 0);
  return best;
}

LocalSearchSolver::LocalSearchSolver(double epsilon) : epsilon_(epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("LocalSearchSolver: epsilon must be > 0");
}

ItemSet LocalSearchSolver::Solve(const SubmodularOracle& oracle, const Matroid& matroid,
                                 ItemSet candidates, Rng& rng) const {
  std::vector<int> items = candidates.ToVector();

  ItemSet current;
  double value = oracle.Eval(ItemSet());
  // Best feasible singleton as the starting point, when it beats empty.
  for (int e : items) {
    if (!matroid.IsIndependent(ItemSet::Of({e}))) continue;
    double v = oracle.Eval(ItemSet::Of({e}));
    if (v > value + kValueTol) {
      current = ItemSet::Of({e});
      value = v;
    }
  }

  auto improves = [&](double v) { return v > value * (1 + epsilon_) + kValueTol; };

  bool improved = true;
  while (improved) {
    improved = false;
    std::vector<int> order = items;
    rng.Shuffle(order);

    for (int e : order) {
      if (current.Contains(e) || !matroid.CanAdd(current, e)) continue;
      double v = value + oracle.Marginal(e, current);
      if (improves(v)) {
        current.Add(e);
        value = v;
        improved = true;
        break;
      }
    }
    if (improved) continue;

    for (int x : order) {
      if (!current.Contains(x)) continue;
      double v = oracle.Eval(current.Without(x));
      if (improves(v)) {
        current.Remove(x);
        value = v;
        improved = true;
        break;
      }
    }
    if (improved) continue;

    for (int x : order) {
      if (!current.Contains(x)) continue;
      for (int e : order) {
        if (current.Contains(e) || !matroid.CanSwap(current, x, e)) continue;
        double v = oracle.Eval(current.Without(x).With(e));
        if (improves(v)) {
          current = current.Without(x).With(e);
          value = v;
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
  }
  return current;
}

ItemSet RandomGreedySolver::Solve(const SubmodularOracle& oracle, const Matroid& matroid,
                                  ItemSet candidates, Rng& rng) const {
  ItemSet current;
  while (true) {
    std::vector<std::pair<double, int>> gains;
    ForEachItem(candidates.Minus(current), [&](int e) {
      if (!matroid.CanAdd(current, e)) return;
      double g = oracle.Marginal(e, current);
      if (g > kValueTol) gains.emplace_back(g, e);
    });
    if (gains.empty()) break;
    std::sort(gains.begin(), gains.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    int budget = std::max(1, matroid.ExtensionRank(current, candidates));
    int top = std::min<int>(budget, static_cast<int>(gains.size()));
    current.Add(gains[rng.UniformInt(0, top - 1)].second);
  }
  return current;
}

std::unique_ptr<InnerSolver> MakeInnerSolver(const std::string& name, double epsilon) {
  if (name == "exact") return std::make_unique<ExactSolver>();
  if (name == "local-search") return std::make_unique<LocalSearchSolver>(epsilon);
  if (name == "random-greedy") return std::make_unique<RandomGreedySolver>();
  throw std::invalid_argument("unknown inner solver '" + name + "'");
}

}  // namespace fairsub
