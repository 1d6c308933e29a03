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
#include <optional>
#include <vector>

#include "faura/aura.hpp"

namespace faura {

/// Witness or counterexample for one point pair. Member indices refer to
/// SeparationProfile::aura_open, the aura topology that was searched.
struct PairWitness {
  std::size_t x = 0;
  std::size_t y = 0;
  std::optional<std::size_t> first;
  std::optional<std::size_t> second;
};

/// Regularity witness: a-closed set `closed` (complement of aura_open[closed])
/// vanishes at `point`, separated by aura_open[first] and aura_open[second].
struct RegularWitness {
  std::size_t closed = 0;
  std::size_t point = 0;
  std::optional<std::size_t> first;
  std::optional<std::size_t> second;
};

struct SeparationAxiom {
  bool holds = false;
  /// One entry per pair when the axiom holds; the violating pair otherwise.
  std::vector<PairWitness> witnesses;
};

struct SeparationProfile {
  /// Unset when the topology is discrete: the aura topology cannot be
  /// enumerated, so only the scope-matrix criterion is available.
  std::optional<SeparationAxiom> t0;
  std::optional<SeparationAxiom> t1;
  std::optional<SeparationAxiom> t2;
  std::optional<bool> regular;
  std::vector<RegularWitness> regular_witnesses;

  /// a(y)(x) = 0 for every x != y. Exact on the discrete topology; a
  /// necessary condition for t1 otherwise.
  bool t1_scope_criterion = false;

  std::vector<FuzzySet> aura_open;

  /// t1 as reported: the witness search when enumerable, else the criterion.
  bool t1_holds() const { return t1 ? t1->holds : t1_scope_criterion; }
};

/// Searches the aura topology for the separation witnesses. "mu(x) = 1"
/// tests are exact; disjointness mu ^ nu = 0 is tested within eps.
SeparationProfile separation_profile(const AuraSpace& space);

struct FuzzyPointCheck {
  bool scope_criterion = false;  ///< a(y)(x) = 0 for all x != y
  bool points_closed = false;    ///< cl_a(chi_x) = chi_x for all x
  bool agree() const noexcept { return scope_criterion == points_closed; }
};

FuzzyPointCheck t1_fuzzy_point_check(const AuraSpace& space);

/// Distinct aura rows for every pair of points.
bool scope_rows_distinct(const ScopeFunction& scope);

}  // namespace faura
