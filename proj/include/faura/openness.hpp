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

#include <optional>
#include <span>
#include <string>

#include "faura/aura.hpp"
#include "faura/verdict.hpp"

namespace faura {

/// Generalized openness of one fuzzy set. The inner int(.) of each class is
/// the interior of the space's topology; the closure is the aura closure.
///
///   semi   mu <= cl_a(int(mu))
///   pre    mu <= int(cl_a(mu))
///   alpha  mu <= int(cl_a(int(mu)))
///   beta   mu <= cl_a(int(cl_a(mu)))
///   b      mu <= cl_a(int(mu)) v int(cl_a(mu))
struct OpennessProfile {
  bool open = false;    ///< member of the topology
  bool a_open = false;  ///< fixed by the aura interior
  bool semi = false;
  bool pre = false;
  bool alpha = false;
  bool beta = false;
  bool b = false;
};

OpennessProfile openness_profile(const AuraSpace& space, const FuzzySet& mu);

/// Returns a description of the first broken implication of
/// open => alpha => semi & pre, semi | pre => b => beta, if any.
std::optional<std::string> hierarchy_violation(const OpennessProfile& profile);

/// Profiles every sample and reports the first hierarchy violation.
CheckVerdict hierarchy_check(const AuraSpace& space, std::span<const FuzzySet> samples);

/// gamma is a-semi-closed iff its complement is a-semi-open. Evaluated in
/// the dual form int_a(cl(gamma)) <= gamma.
bool is_semi_closed(const AuraSpace& space, const FuzzySet& gamma);

}  // namespace faura
