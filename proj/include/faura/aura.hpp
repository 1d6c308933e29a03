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
#include <span>
#include <vector>

#include "faura/lattice.hpp"
#include "faura/topology.hpp"

namespace faura {

/// Per-point fuzzy neighbourhoods stored as a dense row-major |X| x |X|
/// matrix: entry (x, y) is the grade of y in the aura of x. Every diagonal
/// entry is exactly 1.
class ScopeFunction {
 public:
  ScopeFunction(Universe universe, std::vector<Grade> row_major);

  static ScopeFunction from_rows(std::span<const FuzzySet> auras);
  /// Every aura is the full set.
  static ScopeFunction trivial(const Universe& universe);
  /// Every aura is the point itself.
  static ScopeFunction identity(const Universe& universe);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_.size(); }
  Grade operator()(std::size_t x, std::size_t y) const { return matrix_[x * size() + y]; }
  std::span<const Grade> matrix() const noexcept { return matrix_; }
  FuzzySet aura(std::size_t x) const;

 private:
  Universe universe_;
  std::vector<Grade> matrix_;
};

enum class ValidationMode {
  lenient,  ///< only the unit diagonal is required
  strict,   ///< additionally every aura must be an open set
};

/// A fuzzy topology paired with a scope function.
class AuraSpace {
 public:
  AuraSpace(FuzzyTopology topology, ScopeFunction scope,
            ValidationMode mode = ValidationMode::lenient);

  const Universe& universe() const noexcept { return topology_.universe(); }
  const FuzzyTopology& topology() const noexcept { return topology_; }
  const ScopeFunction& scope() const noexcept { return scope_; }
  ValidationMode mode() const noexcept { return mode_; }

 private:
  FuzzyTopology topology_;
  ScopeFunction scope_;
  ValidationMode mode_;
};

struct ScopeProfile {
  bool trivial = false;
  bool crisp = false;
  bool symmetric = false;
  bool transitive = false;
};

/// cl(mu)(x) = max_y min(a(x)(y), mu(y)).
FuzzySet aura_closure(const ScopeFunction& scope, const FuzzySet& mu);
/// int(mu)(x) = min_y max(1 - a(x)(y), mu(y)).
FuzzySet aura_interior(const ScopeFunction& scope, const FuzzySet& mu);

inline FuzzySet aura_closure(const AuraSpace& space, const FuzzySet& mu) {
  return aura_closure(space.scope(), mu);
}
inline FuzzySet aura_interior(const AuraSpace& space, const FuzzySet& mu) {
  return aura_interior(space.scope(), mu);
}

/// n-fold aura closure; n = 0 returns mu.
FuzzySet iterated_closure(const ScopeFunction& scope, const FuzzySet& mu, std::size_t n);

/// Limit of the closure iteration. On a finite universe the fixpoint is
/// reached within |X| steps; not reaching it raises InternalError.
FuzzySet closure_fixpoint(const ScopeFunction& scope, const FuzzySet& mu);

/// Members of the space's topology that are fixed by the aura interior.
/// Throws InapplicableError for the discrete topology.
FuzzyTopology aura_topology(const AuraSpace& space);

/// Fixpoint tests within eps.
bool is_a_open(const AuraSpace& space, const FuzzySet& mu);
bool is_a_closed(const AuraSpace& space, const FuzzySet& gamma);

/// Member of the topology and fixed by the aura interior, i.e. a member of
/// aura_topology(space). Works for the discrete topology too.
bool in_aura_topology(const AuraSpace& space, const FuzzySet& mu);

ScopeProfile classify_scope(const ScopeFunction& scope);
inline ScopeProfile classify_scope(const AuraSpace& space) {
  return classify_scope(space.scope());
}

/// Topological closure against aura closure, point by point. Diagnostic
/// only: cl <= cl_a is not guaranteed in general.
struct ClosureComparison {
  FuzzySet topological;
  FuzzySet aura;
  std::vector<bool> dominated;  ///< cl(mu)(x) <= cl_a(mu)(x)
  bool all_dominated() const;
};
ClosureComparison closure_comparison(const AuraSpace& space, const FuzzySet& mu);

}  // namespace faura
