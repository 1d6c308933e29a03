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

#include "faura/rough.hpp"

#include <algorithm>
#include <string>

#include "faura/error.hpp"

namespace faura {
namespace {

FuzzySet difference(const FuzzySet& upper, const FuzzySet& lower) {
  std::vector<Grade> out(upper.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(0.0, upper[i] - lower[i]);
  return FuzzySet(upper.universe(), std::move(out));
}

}  // namespace

ApproximationPair approximate(const ScopeFunction& scope, const FuzzySet& mu) {
  auto lower = aura_interior(scope, mu);
  auto upper = aura_closure(scope, mu);
  auto boundary = difference(upper, lower);
  return {std::move(lower), std::move(upper), std::move(boundary)};
}

FuzzyRelation::FuzzyRelation(Universe universe, std::vector<Grade> row_major)
    : universe_(std::move(universe)), matrix_(std::move(row_major)) {
  const std::size_t n = universe_.size();
  if (matrix_.size() != n * n) throw ValidationError("relation matrix has the wrong size");
  for (Grade& g : matrix_) g = checked_grade(g);
  for (std::size_t x = 0; x < n; ++x) {
    if (matrix_[x * n + x] != 1.0) {
      throw ValidationError("relation is not reflexive at '" + universe_.name(x) + "'");
    }
  }
}

FuzzyRelation FuzzyRelation::from_scope(const ScopeFunction& scope) {
  return FuzzyRelation(scope.universe(),
                       std::vector<Grade>(scope.matrix().begin(), scope.matrix().end()));
}

ApproximationPair dubois_prade(const FuzzyRelation& r, const FuzzySet& mu) {
  require_same_universe(r.universe(), mu.universe(), "dubois-prade");
  const std::size_t n = r.size();
  std::vector<Grade> lower(n), upper(n);
  for (std::size_t x = 0; x < n; ++x) {
    Grade inf = 1.0, sup = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
      inf = std::min(inf, std::max(1.0 - r(x, y), mu[y]));
      sup = std::max(sup, std::min(r(x, y), mu[y]));
    }
    lower[x] = inf;
    upper[x] = sup;
  }
  FuzzySet lo(mu.universe(), std::move(lower));
  FuzzySet up(mu.universe(), std::move(upper));
  auto boundary = difference(up, lo);
  return {std::move(lo), std::move(up), std::move(boundary)};
}

void validate_partition(const Universe& universe, const Partition& partition) {
  std::vector<int> hits(universe.size(), 0);
  for (const auto& block : partition) {
    if (block.empty()) throw ValidationError("partition has an empty block");
    for (std::size_t x : block) {
      if (x >= universe.size()) throw ValidationError("partition names an unknown point");
      ++hits[x];
    }
  }
  for (std::size_t x = 0; x < hits.size(); ++x) {
    if (hits[x] != 1) {
      throw ValidationError("point '" + universe.name(x) +
                            "' must lie in exactly one partition block");
    }
  }
}

CrispApproximation pawlak(const Universe& universe, const Partition& partition,
                          const PointSet& subset) {
  validate_partition(universe, partition);
  std::vector<bool> in(universe.size(), false);
  for (std::size_t x : subset) in.at(x) = true;

  CrispApproximation out;
  for (const auto& block : partition) {
    bool inside = std::all_of(block.begin(), block.end(), [&](std::size_t x) { return in[x]; });
    bool meets = std::any_of(block.begin(), block.end(), [&](std::size_t x) { return in[x]; });
    if (inside) out.lower.insert(out.lower.end(), block.begin(), block.end());
    if (meets) out.upper.insert(out.upper.end(), block.begin(), block.end());
  }
  std::sort(out.lower.begin(), out.lower.end());
  std::sort(out.upper.begin(), out.upper.end());
  return out;
}

ScopeFunction partition_scope(const Universe& universe, const Partition& partition) {
  validate_partition(universe, partition);
  const std::size_t n = universe.size();
  std::vector<Grade> matrix(n * n, 0.0);
  for (const auto& block : partition) {
    for (std::size_t x : block) {
      for (std::size_t y : block) matrix[x * n + y] = 1.0;
    }
  }
  return ScopeFunction(universe, std::move(matrix));
}

Accuracy accuracy(const ApproximationPair& pair) {
  const Grade upper = sum(pair.upper);
  if (upper == 0.0) return {1.0, 0.0};
  const Grade rho = sum(pair.lower) / upper;
  return {rho, 1.0 - rho};
}

RefinementReport refinement_compare(const AuraSpace& space1, const AuraSpace& space2,
                                    const FuzzySet& mu) {
  require_same_universe(space1.universe(), space2.universe(), "refinement");
  require_same_universe(space1.universe(), mu.universe(), "refinement");
  RefinementReport report{RefinementReport::Status::incomparable,
                          approximate(space1, mu), approximate(space2, mu)};
  const auto& a1 = space1.scope().matrix();
  const auto& a2 = space2.scope().matrix();
  for (std::size_t i = 0; i < a1.size(); ++i) {
    if (!grade_le(a2[i], a1[i])) return report;
  }
  const bool ok = leq(report.coarse.lower, report.fine.lower) &&
                  leq(report.fine.upper, report.coarse.upper) &&
                  leq(report.fine.boundary, report.coarse.boundary);
  report.status = ok ? RefinementReport::Status::refined : RefinementReport::Status::violated;
  return report;
}

}  // namespace faura
