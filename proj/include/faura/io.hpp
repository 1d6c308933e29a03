// Copyright 2026 The fuzzy-aura Authors
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

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "faura/aura.hpp"
#include "faura/mcdm.hpp"
#include "faura/morphisms.hpp"
#include "faura/openness.hpp"
#include "faura/rough.hpp"
#include "faura/separation.hpp"

namespace faura::io {

/// Insertion-ordered JSON: emitted keys keep a fixed order and class lists
/// keep their declaration order on input.
using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);

/// Grades as full-precision decimals, keys in a fixed order.
std::string dump(const Json& json);

// {"universe": [...], "grades": [...]}
FuzzySet parse_fuzzy_set(const Json& json);
/// The set's own universe must match `expected`.
FuzzySet parse_fuzzy_set(const Json& json, const Universe& expected);
Json to_json(const FuzzySet& mu);

// {"universe": [...], "members": [[...], ...]} or {"universe": [...], "discrete": true}.
// The universe key may be omitted when `universe` is supplied.
FuzzyTopology parse_topology(const Json& json, const std::optional<Universe>& universe = {});
Json to_json(const FuzzyTopology& topology);

// {"universe", "topology", "scope": {"p": [...], ...}, "mode": "lenient"|"strict"}
/// `force_strict` upgrades the declared mode.
AuraSpace parse_space(const Json& json, bool force_strict = false);
Json to_json(const AuraSpace& space);

// {"source": [...], "target": [...], "map": {"p": "u", ...}}
PointMap parse_point_map(const Json& json);
Json to_json(const PointMap& f);

Json to_json(const OpennessProfile& profile);
Json to_json(const ContinuityProfile& profile);
Json to_json(const SeparationProfile& profile, const Universe& universe);
Json to_json(const ApproximationPair& pair, const Accuracy& accuracy);
Json to_json(const CheckVerdict& verdict);
Json to_json(const ScopeProfile& profile);

// {"alternatives", "criteria": [{"name","kind","weight"}], "matrix", "classes": {name: [g|null]},
//  "reference": {alternative: class}}
mcdm::DecisionProblem parse_problem(const Json& json);
Json to_json(const mcdm::DecisionProblem& problem);

/// Matrix CSV: header "alternative,<criterion>..."; one row per alternative.
/// Classes CSV: header "alternative,<class>..."; an empty cell is unknown.
/// Weights default to equal; criteria named in `cost` are cost criteria.
mcdm::DecisionProblem load_problem_csv(const std::filesystem::path& matrix_csv,
                                       const std::filesystem::path& classes_csv,
                                       std::optional<std::vector<Grade>> weights = {},
                                       std::span<const std::string> cost = {});

std::vector<mcdm::WeightScenario> parse_scenarios(const Json& json);

Json to_json(const mcdm::RunResult& result, const mcdm::DecisionProblem& problem);
Json to_json(const mcdm::SensitivityReport& report, const mcdm::DecisionProblem& problem);

/// Splits one CSV record honouring double quotes.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace faura::io
