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

#ifndef FAIRSUB_IO_H_
#define FAIRSUB_IO_H_

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "fairsub/fair_solver.h"
#include "fairsub/fairness.h"
#include "fairsub/instance.h"

// Instance files and run reports are JSON with a "format": 1 version field.
// Instance schema: { format, n, groups: [[item,...],...],
//   objective: {type:"cut", edges:[[u,v,w],...]} |
//              {type:"table", values:[...2^n...]} }
// Table values are indexed by subset bitmask, item k <-> bit k.

namespace fairsub {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kFileFormatVersion = 1;

// Parses and validates an instance document: partition property, index
// ranges, nonnegative weights/values, table length exactly 2^n. When
// `check_submodular` is set, table objectives are additionally validated
// for submodularity (exhaustively for n <= 12, sampled above) and rejected
// with a ParseError naming a witness on failure. Verification workflows
// load with the check off so a corrupted table reaches the checker itself.
Instance ParseInstance(const nlohmann::json& doc, bool check_submodular = true);
Instance LoadInstance(const std::string& path, bool check_submodular = true);

nlohmann::json InstanceToJson(const Instance& inst);
void SaveInstance(const Instance& inst, const std::string& path);

// FNV-1a 64 over the file bytes, as 16 hex digits.
std::string DigestFile(const std::string& path);

// Run report. Fractions are serialized exactly ("1/2", never "0.5").
nlohmann::json ReportToJson(const SolveReport& report, const FairnessSpec& spec,
                            const FairSolveConfig& config,
                            const std::string& instance_path,
                            const std::string& instance_digest);

FairnessSpec SpecFromFlags(const std::string& alpha, const std::string& beta,
                           std::optional<int> cap, int n);

}  // namespace fairsub

#endif  // FAIRSUB_IO_H_
