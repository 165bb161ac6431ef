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

#include "fairsub/oracle.h"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fairsub {

CutOracle::CutOracle(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw std::invalid_argument("CutOracle: n out of range [0,64]");
  }
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("CutOracle: self-loop");
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("CutOracle: endpoint out of range");
    }
    if (e.weight < 0 || !std::isfinite(e.weight)) {
      throw std::invalid_argument("CutOracle: edge weight must be finite and nonnegative");
    }
    adjacency_[e.u].emplace_back(e.v, e.weight);
    adjacency_[e.v].emplace_back(e.u, e.weight);
  }
}

double CutOracle::Value(ItemSet s) const {
  double total = 0;
  for (const Edge& e : edges_) {
    if (s.Contains(e.u) != s.Contains(e.v)) total += e.weight;
  }
  return total;
}

double CutOracle::Marginal(int e, ItemSet s) const {
  CountCall();
  double gain = 0;
  for (const auto& [other, w] : adjacency_[e]) {
    gain += s.Contains(other) ? -w : w;
  }
  return gain;
}

TableOracle::TableOracle(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n < 0 || n > kMaxTableGroundSize) {
    throw std::invalid_argument("TableOracle: n out of range [0,20]");
  }
  if (values_.size() != (size_t{1} << n)) {
    throw std::invalid_argument("TableOracle: table length must be exactly 2^n");
  }
  for (double v : values_) {
    if (v < 0 || !std::isfinite(v)) {
      throw std::invalid_argument("TableOracle: values must be finite and nonnegative");
    }
  }
}

double TableOracle::Marginal(int e, ItemSet s) const {
  CountCall();
  return values_[s.With(e).bits()] - values_[s.bits()];
}

std::shared_ptr<SubmodularOracle> MakeComplementOracle(
    std::shared_ptr<const SubmodularOracle> inner) {
  ItemSet full = ItemSet::Full(inner->ground_size());
  return std::make_shared<ComplementOracle>(std::move(inner), full);
}

std::shared_ptr<SubmodularOracle> MakeComplementOracle(
    std::shared_ptr<const SubmodularOracle> inner, ItemSet universe) {
  return std::make_shared<ComplementOracle>(std::move(inner), universe);
}

ValidationResult ValidateSubmodular(const SubmodularOracle& oracle, ValidationMode mode,
                                    int trials, uint64_t seed, double tolerance) {
  const int n = oracle.ground_size();
  auto check = [&](ItemSet x, int b, int a) -> std::optional<SubmodularityWitness> {
    // Adjacent form of diminishing returns: f(a | X+{b}) <= f(a | X).
    ItemSet y = x.With(b);
    double gain_inner = oracle.Marginal(a, x);
    double gain_outer = oracle.Marginal(a, y);
    if (gain_outer > gain_inner + tolerance) {
      return SubmodularityWitness{x, y, a, gain_inner, gain_outer};
    }
    return std::nullopt;
  };

  if (mode == ValidationMode::kExhaustive) {
    if (n > 12) {
      throw std::invalid_argument("ValidateSubmodular: exhaustive mode requires n <= 12");
    }
    for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
      ItemSet x(bits);
      for (int b = 0; b < n; ++b) {
        if (x.Contains(b)) continue;
        for (int a = 0; a < n; ++a) {
          if (a == b || x.Contains(a)) continue;
          if (auto w = check(x, b, a)) return {false, w};
        }
      }
    }
    return {true, std::nullopt};
  }

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    if (n < 2) break;
    int a = rng.UniformInt(0, n - 1);
    int b = rng.UniformInt(0, n - 1);
    if (a == b) continue;
    ItemSet x(rng.NextU64() & ItemSet::Full(n).bits());
    x.Remove(a);
    x.Remove(b);
    if (auto w = check(x, b, a)) return {false, w};
  }
  return {true, std::nullopt};
}

std::shared_ptr<CutOracle> MakeRandomCutOracle(int n, double edge_probability,
                                               double weight_min, double weight_max,
                                               uint64_t seed) {
  if (n < 2) throw std::invalid_argument("MakeRandomCutOracle: n must be >= 2");
  if (edge_probability < 0 || edge_probability > 1) {
    throw std::invalid_argument("MakeRandomCutOracle: probability must be in [0,1]");
  }
  if (weight_min < 0 || weight_max < weight_min) {
    throw std::invalid_argument("MakeRandomCutOracle: bad weight range");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!rng.Bernoulli(edge_probability)) continue;
      double w = weight_min == weight_max ? weight_min
                                          : rng.UniformReal(weight_min, weight_max);
      edges.push_back({u, v, w});
    }
  }
  return std::make_shared<CutOracle>(n, std::move(edges));
}

std::shared_ptr<TableOracle> TabulateOracle(const SubmodularOracle& oracle, double base) {
  const int n = oracle.ground_size();
  if (n > TableOracle::kMaxTableGroundSize) {
    throw std::invalid_argument("TabulateOracle: n exceeds table limit");
  }
  std::vector<double> values(size_t{1} << n);
  for (uint64_t bits = 0; bits < values.size(); ++bits) {
    values[bits] = base + oracle.Eval(ItemSet(bits));
  }
  return std::make_shared<TableOracle>(n, std::move(values));
}

std::shared_ptr<TableOracle> MakeRandomCoverageTable(int n, int universe_size,
                                                     double density, uint64_t seed) {
  if (n < 1 || n > TableOracle::kMaxTableGroundSize) {
    throw std::invalid_argument("MakeRandomCoverageTable: n out of range [1,20]");
  }
  if (universe_size < 1 || universe_size > 63) {
    throw std::invalid_argument("MakeRandomCoverageTable: universe_size out of range");
  }
  Rng rng(seed);
  std::vector<uint64_t> covers(n, 0);
  std::vector<double> weight(universe_size);
  for (int u = 0; u < universe_size; ++u) weight[u] = rng.UniformReal(0.5, 1.5);
  for (int e = 0; e < n; ++e) {
    for (int u = 0; u < universe_size; ++u) {
      if (rng.Bernoulli(density)) covers[e] |= uint64_t{1} << u;
    }
  }
  std::vector<double> values(size_t{1} << n);
  for (uint64_t bits = 0; bits < values.size(); ++bits) {
    uint64_t covered = 0;
    for (uint64_t b = bits; b != 0; b &= b - 1) {
      covered |= covers[std::countr_zero(b)];
    }
    double total = 0;
    for (uint64_t c = covered; c != 0; c &= c - 1) {
      total += weight[std::countr_zero(c)];
    }
    values[bits] = total;
  }
  return std::make_shared<TableOracle>(n, std::move(values));
}

}  // namespace fairsub
