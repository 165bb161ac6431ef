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

#ifndef FAIRSUB_FRACTION_H_
#define FAIRSUB_FRACTION_H_

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fairsub {

// Exact rational arithmetic for the fairness parameters. The per-group
// bounds are floors of alpha/beta times a group size; computing them in
// floating point would silently change constraints (e.g. 0.3 * 10).
using Fraction = boost::rational<int64_t>;

// floor(f * k) for f >= 0, k >= 0, computed in integer arithmetic.
inline int FloorScale(const Fraction& f, int k) {
  if (f < 0 || k < 0) throw std::invalid_argument("FloorScale: negative input");
  return static_cast<int>((f.numerator() * k) / f.denominator());
}

// Accepts "p/q", an integer literal, or a decimal literal. Decimals parse
// exactly as written ("0.5" -> 1/2, "0.51" -> 51/100).
Fraction ParseFraction(const std::string& text);

// "p/q" with q > 1, else just "p". Never a decimal.
std::string FormatFraction(const Fraction& f);

}  // namespace fairsub

#endif  // FAIRSUB_FRACTION_H_
