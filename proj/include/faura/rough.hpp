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

#include <vector>

#include "faura/aura.hpp"

namespace faura {

/// lower <= subject <= upper; boundary = upper - lower.
struct ApproximationPair {
  FuzzySet lower;
  FuzzySet upper;
  FuzzySet boundary;
};

/// Lower = aura interior, upper = aura closure.
ApproximationPair approximate(const ScopeFunction& scope, const FuzzySet& mu);
inline ApproximationPair approximate(const AuraSpace& space, const FuzzySet& mu) {
  return approximate(space.scope(), mu);
}

/// Reflexive fuzzy relation R(x, y) on a finite universe.
class FuzzyRelation {
 public:
  /// Throws ValidationError unless every R(x, x) is exactly 1.
  FuzzyRelation(Universe universe, std::vector<Grade> row_major);
  static FuzzyRelation from_scope(const ScopeFunction& scope);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_.size(); }
  Grade operator()(std::size_t x, std::size_t y) const { return matrix_[x * size() + y]; }

 private:
  Universe universe_;
  std::vector<Grade> matrix_;
};

/// Inf-max / sup-min approximations induced by a reflexive relation.
ApproximationPair dubois_prade(const FuzzyRelation& relation, const FuzzySet& mu);

/// Blocks of an equivalence relation on a universe.
using Partition = std::vector<PointSet>;

struct CrispApproximation {
  PointSet lower;
  PointSet upper;
};

/// Throws ValidationError unless the blocks are non-empty, disjoint and
/// cover the universe.
void validate_partition(const Universe& universe, const Partition& partition);

/// Classical lower {x : [x] within A} and upper {x : [x] meets A}.
CrispApproximation pawlak(const Universe& universe, const Partition& partition,
                          const PointSet& subset);

/// Scope whose aura of x is the characteristic set of x's block.
ScopeFunction partition_scope(const Universe& universe, const Partition& partition);

struct Accuracy {
  Grade rho = 1.0;    ///< sum(lower) / sum(upper); 1 when both sums vanish
  Grade sigma = 0.0;  ///< 1 - rho
};

Accuracy accuracy(const ApproximationPair& pair);
inline Accuracy accuracy(const ScopeFunction& scope, const FuzzySet& mu) {
  return accuracy(approximate(scope, mu));
}

struct RefinementReport {
  enum class Status { refined, incomparable, violated };
  Status status = Status::incomparable;
  ApproximationPair coarse;  ///< under the larger scope
  ApproximationPair fine;    ///< under the pointwise smaller scope
};

/// When scope2 <= scope1 pointwise, checks lower1 <= lower2, upper2 <= upper1
/// and boundary2 <= boundary1.
RefinementReport refinement_compare(const AuraSpace& space1, const AuraSpace& space2,
                                    const FuzzySet& mu);

}  // namespace faura
