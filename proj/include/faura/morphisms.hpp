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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "faura/aura.hpp"
#include "faura/openness.hpp"
#include "faura/verdict.hpp"

namespace faura {

/// Total map between two finite universes.
class PointMap {
 public:
  PointMap(Universe source, Universe target, std::vector<std::size_t> assignment);
  static PointMap from_names(Universe source, Universe target,
                             const std::map<std::string, std::string>& assignment);
  static PointMap identity(const Universe& universe);
  static PointMap constant(Universe source, Universe target, std::size_t value);

  const Universe& source() const noexcept { return source_; }
  const Universe& target() const noexcept { return target_; }
  std::size_t operator()(std::size_t x) const { return assignment_[x]; }
  const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }

 private:
  Universe source_;
  Universe target_;
  std::vector<std::size_t> assignment_;
};

/// f^-1(nu)(x) = nu(f(x)).
FuzzySet preimage(const PointMap& f, const FuzzySet& nu);

/// g after f.
PointMap compose(const PointMap& f, const PointMap& g);

/// `continuous` and the four generalized flags quantify over every member of
/// the target topology; `a_continuous` over the target's aura topology and
/// tests preimages against the source's aura topology.
struct ContinuityProfile {
  bool continuous = false;
  bool a_continuous = false;
  bool semi = false;
  bool pre = false;
  bool alpha = false;
  bool beta = false;
  bool b = false;
};

/// Throws InapplicableError when the target topology is discrete.
ContinuityProfile continuity_profile(const PointMap& f, const AuraSpace& source,
                                     const AuraSpace& target);

/// Semi-continuity evaluated through closed sets: every complement of a
/// target member has an a-semi-closed preimage.
bool semi_continuous_by_closed_sets(const PointMap& f, const AuraSpace& source,
                                    const AuraSpace& target);

/// continuous => alpha => semi & pre; semi | pre => b => beta.
CheckVerdict continuity_chain_check(const ContinuityProfile& profile);

/// alpha <=> semi & pre when the source scope is transitive; inapplicable
/// otherwise.
CheckVerdict decomposition_check(const PointMap& f, const AuraSpace& source,
                                 const AuraSpace& target);

/// For f: X -> Y and g: Y -> Z checks that a-continuity composes and that a
/// semi-continuous f followed by a continuous g is semi-continuous.
CheckVerdict composition_check(const PointMap& f, const PointMap& g, const AuraSpace& x,
                               const AuraSpace& y, const AuraSpace& z);

}  // namespace faura
