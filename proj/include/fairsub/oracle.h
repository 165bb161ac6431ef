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

#ifndef FAIRSUB_ORACLE_H_
#define FAIRSUB_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "fairsub/itemset.h"
#include "fairsub/rng.h"

namespace fairsub {

// Value oracle for a nonnegative set function on {0,...,n-1}. Implementations
// are read-only after construction and safe for concurrent evaluation; the
// query counter is the only mutable state and is updated atomically.
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;

  virtual int ground_size() const = 0;

  double Eval(ItemSet s) const {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return Value(s);
  }

  // f(S + e) - f(S). Counts as one query. Requires e not in s.
  virtual double Marginal(int e, ItemSet s) const {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return Value(s.With(e)) - Value(s);
  }

  uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }
  void ResetCalls() const { calls_.store(0, std::memory_order_relaxed); }

 protected:
  virtual double Value(ItemSet s) const = 0;

  // For Marginal overrides that bypass Value-based evaluation.
  void CountCall() const { calls_.fetch_add(1, std::memory_order_relaxed); }

 private:
  mutable std::atomic<uint64_t> calls_{0};
};

// Weighted undirected edge; endpoints are distinct items, weight >= 0.
struct Edge {
  int u;
  int v;
  double weight;
};

// Cut function of a weighted undirected graph: f(S) = total weight of edges
// with exactly one endpoint in S. Nonnegative, symmetric, non-monotone
// submodular.
class CutOracle : public SubmodularOracle {
 public:
  CutOracle(int n, std::vector<Edge> edges);

  int ground_size() const override { return n_; }
  double Marginal(int e, ItemSet s) const override;

  const std::vector<Edge>& edges() const { return edges_; }

 protected:
  double Value(ItemSet s) const override;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, double>>> adjacency_;
};

// Explicit value table over all 2^n subsets, indexed by bitmask (item k <->
// bit k). Values must be nonnegative; submodularity is the caller's claim and
// can be checked with ValidateSubmodular (the loader does this for n <= 12
// exhaustively, by sampling otherwise).
class TableOracle : public SubmodularOracle {
 public:
  static constexpr int kMaxTableGroundSize = 20;

  TableOracle(int n, std::vector<double> values);

  int ground_size() const override { return n_; }
  double Marginal(int e, ItemSet s) const override;

  const std::vector<double>& values() const { return values_; }

 protected:
  double Value(ItemSet s) const override { return values_[s.bits()]; }

 private:
  int n_;
  std::vector<double> values_;
};

// g(S) = f(U \ S) restricted to a universe U. Submodular and nonnegative
// whenever f is; ground indices are shared with f.
class ComplementOracle : public SubmodularOracle {
 public:
  ComplementOracle(std::shared_ptr<const SubmodularOracle> inner, ItemSet universe)
      : inner_(std::move(inner)), universe_(universe) {}

  int ground_size() const override { return inner_->ground_size(); }
  ItemSet universe() const { return universe_; }

 protected:
  double Value(ItemSet s) const override { return inner_->Eval(universe_.Minus(s)); }

 private:
  std::shared_ptr<const SubmodularOracle> inner_;
  ItemSet universe_;
};

std::shared_ptr<SubmodularOracle> MakeComplementOracle(
    std::shared_ptr<const SubmodularOracle> inner);
std::shared_ptr<SubmodularOracle> MakeComplementOracle(
    std::shared_ptr<const SubmodularOracle> inner, ItemSet universe);

enum class ValidationMode { kExhaustive, kSampled };

struct SubmodularityWitness {
  ItemSet inner;    // X
  ItemSet outer;    // Y, X subset of Y
  int item;         // e not in Y
  double gain_inner;
  double gain_outer;  // violating: gain_outer > gain_inner
};

struct ValidationResult {
  bool ok = true;
  std::optional<SubmodularityWitness> witness;
};

// Checks f(e|Y) <= f(e|X) for X subset of Y, e outside Y, up to `tolerance`.
// Exhaustive mode requires n <= 12 and covers every adjacent pair
// (X, X+{b}), which is equivalent to the full quantifier. Sampled mode draws
// `trials` random triples.
ValidationResult ValidateSubmodular(const SubmodularOracle& oracle, ValidationMode mode,
                                    int trials = 20000, uint64_t seed = 0,
                                    double tolerance = 1e-9);

// Erdos-Renyi cut instance: every pair becomes an edge with probability
// `edge_probability`, weight uniform in [weight_min, weight_max).
// Deterministic for a fixed seed.
std::shared_ptr<CutOracle> MakeRandomCutOracle(int n, double edge_probability,
                                               double weight_min, double weight_max,
                                               uint64_t seed);

// Tabulates `base + f(S)` for every subset. Requires n <= 20. With base > 0
// this yields fixtures with a strictly positive value at the empty set.
std::shared_ptr<TableOracle> TabulateOracle(const SubmodularOracle& oracle,
                                            double base = 0.0);

// Random weighted-coverage table: item e covers a random subset of
// `universe_size` elements, each with probability `density`; f(S) is the
// weight of the union. Monotone submodular. Requires n <= 20.
std::shared_ptr<TableOracle> MakeRandomCoverageTable(int n, int universe_size,
                                                     double density, uint64_t seed);

}  // namespace fairsub

#endif  // FAIRSUB_ORACLE_H_
