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

#include "faura/aura.hpp"

#include <algorithm>
#include <string>

#include "faura/error.hpp"

namespace faura {

ScopeFunction::ScopeFunction(Universe universe, std::vector<Grade> row_major)
    : universe_(std::move(universe)), matrix_(std::move(row_major)) {
  const std::size_t n = universe_.size();
  if (matrix_.size() != n * n) {
    throw ValidationError("scope matrix must have " + std::to_string(n * n) + " entries");
  }
  for (Grade& g : matrix_) g = checked_grade(g);
  for (std::size_t x = 0; x < n; ++x) {
    if (matrix_[x * n + x] != 1.0) {
      throw ValidationError("aura of '" + universe_.name(x) +
                            "' must contain its own point with grade exactly 1");
    }
  }
}

ScopeFunction ScopeFunction::from_rows(std::span<const FuzzySet> auras) {
  if (auras.empty()) throw ValidationError("scope function needs one aura per point");
  const Universe& universe = auras.front().universe();
  if (auras.size() != universe.size()) {
    throw ValidationError("scope function needs one aura per point");
  }
  std::vector<Grade> matrix;
  matrix.reserve(universe.size() * universe.size());
  for (const auto& row : auras) {
    require_same_universe(universe, row.universe(), "scope function");
    matrix.insert(matrix.end(), row.grades().begin(), row.grades().end());
  }
  return ScopeFunction(universe, std::move(matrix));
}

ScopeFunction ScopeFunction::trivial(const Universe& universe) {
  return ScopeFunction(universe, std::vector<Grade>(universe.size() * universe.size(), 1.0));
}

ScopeFunction ScopeFunction::identity(const Universe& universe) {
  const std::size_t n = universe.size();
  std::vector<Grade> matrix(n * n, 0.0);
  for (std::size_t x = 0; x < n; ++x) matrix[x * n + x] = 1.0;
  return ScopeFunction(universe, std::move(matrix));
}

FuzzySet ScopeFunction::aura(std::size_t x) const {
  const std::size_t n = size();
  return FuzzySet(universe_, std::vector<Grade>(matrix_.begin() + x * n,
                                                matrix_.begin() + (x + 1) * n));
}

AuraSpace::AuraSpace(FuzzyTopology topology, ScopeFunction scope, ValidationMode mode)
    : topology_(std::move(topology)), scope_(std::move(scope)), mode_(mode) {
  require_same_universe(topology_.universe(), scope_.universe(), "aura space");
  if (mode_ == ValidationMode::strict) {
    for (std::size_t x = 0; x < scope_.size(); ++x) {
      if (!topology_.contains(scope_.aura(x))) {
        throw ValidationError("strict mode: aura of '" + universe().name(x) +
                              "' is not an open set");
      }
    }
  }
}

FuzzySet aura_closure(const ScopeFunction& scope, const FuzzySet& mu) {
  require_same_universe(scope.universe(), mu.universe(), "aura closure");
  const std::size_t n = scope.size();
  std::vector<Grade> out(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) out[x] = std::max(out[x], std::min(scope(x, y), mu[y]));
  }
  return FuzzySet(mu.universe(), std::move(out));
}

FuzzySet aura_interior(const ScopeFunction& scope, const FuzzySet& mu) {
  require_same_universe(scope.universe(), mu.universe(), "aura interior");
  const std::size_t n = scope.size();
  std::vector<Grade> out(n, 1.0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      out[x] = std::min(out[x], std::max(1.0 - scope(x, y), mu[y]));
    }
  }
  return FuzzySet(mu.universe(), std::move(out));
}

FuzzySet iterated_closure(const ScopeFunction& scope, const FuzzySet& mu, std::size_t n) {
  FuzzySet current = mu;
  for (std::size_t i = 0; i < n; ++i) current = aura_closure(scope, current);
  return current;
}

FuzzySet closure_fixpoint(const ScopeFunction& scope, const FuzzySet& mu) {
  FuzzySet current = mu;
  for (std::size_t step = 0; step <= scope.size(); ++step) {
    FuzzySet next = aura_closure(scope, current);
    if (next == current) return current;
    current = std::move(next);
  }
  throw InternalError("aura closure iteration did not stabilise within |X| steps");
}

bool is_a_open(const AuraSpace& space, const FuzzySet& mu) {
  return aura_interior(space, mu).approx_equal(mu);
}

bool is_a_closed(const AuraSpace& space, const FuzzySet& gamma) {
  return aura_closure(space, gamma).approx_equal(gamma);
}

bool in_aura_topology(const AuraSpace& space, const FuzzySet& mu) {
  return space.topology().contains(mu) && is_a_open(space, mu);
}

FuzzyTopology aura_topology(const AuraSpace& space) {
  std::vector<FuzzySet> fixed;
  for (const auto& m : space.topology().members()) {
    if (is_a_open(space, m)) fixed.push_back(m);
  }
  auto verdict = verify_axioms(fixed);
  if (!verdict.ok()) {
    throw InternalError("aura-open members do not form a topology: " +
                        verdict.violation->describe());
  }
  return FuzzyTopology::from_members(std::move(fixed));
}

ScopeProfile classify_scope(const ScopeFunction& a) {
  const std::size_t n = a.size();
  ScopeProfile p{true, true, true, true};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (a(x, y) != 1.0) p.trivial = false;
      if (a(x, y) != 0.0 && a(x, y) != 1.0) p.crisp = false;
      if (!grade_eq(a(x, y), a(y, x))) p.symmetric = false;
      for (std::size_t z = 0; z < n && p.transitive; ++z) {
        if (!grade_le(std::min(a(x, y), a(y, z)), a(x, z))) p.transitive = false;
      }
    }
  }
  return p;
}

bool ClosureComparison::all_dominated() const {
  return std::all_of(dominated.begin(), dominated.end(), [](bool b) { return b; });
}

ClosureComparison closure_comparison(const AuraSpace& space, const FuzzySet& mu) {
  auto topological = closure(space.topology(), mu);
  auto aura = aura_closure(space, mu);
  std::vector<bool> dominated(mu.size());
  for (std::size_t x = 0; x < mu.size(); ++x) {
    dominated[x] = grade_le(topological[x], aura[x]);
  }
  return {std::move(topological), std::move(aura), std::move(dominated)};
}

}  // namespace faura
