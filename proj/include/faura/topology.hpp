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
#include <span>
#include <string>
#include <vector>

#include "faura/lattice.hpp"

namespace faura {

struct AxiomViolation {
  enum class Kind { missing_bottom, missing_top, meet_not_closed, join_not_closed };

  Kind kind;
  /// Indices into the verified family; unset for missing 0 / 1.
  std::optional<std::size_t> first;
  std::optional<std::size_t> second;
  FuzzySet missing;

  std::string describe() const;
};

struct AxiomVerdict {
  std::optional<AxiomViolation> violation;
  bool ok() const noexcept { return !violation.has_value(); }
};

/// Checks the Chang axioms on a finite family: 0 and 1 present, closed under
/// pairwise meet and join (up to eps). Pairs are scanned in lexicographic
/// index order, meet before join, so the first violation is deterministic.
/// Throws ValidationError on an empty family, UniverseMismatch on mixed
/// universes.
AxiomVerdict verify_axioms(std::span<const FuzzySet> family);

/// Chang fuzzy topology on a finite universe, either an explicit verified
/// member list or the discrete topology I^X, which is never enumerated.
class FuzzyTopology {
 public:
  /// Verifies the axioms and drops eps-duplicates. Throws ValidationError
  /// carrying AxiomViolation::describe() on failure.
  static FuzzyTopology from_members(std::vector<FuzzySet> members);

  /// Smallest family containing the subbasis, 0 and 1 that is closed under
  /// pairwise meet and join. Throws ValidationError for an empty subbasis
  /// or when more than kGenerateCap new members would be needed.
  static FuzzyTopology generate(std::span<const FuzzySet> subbasis);

  static FuzzyTopology discrete(Universe universe);
  static FuzzyTopology indiscrete(const Universe& universe);

  /// All fuzzy sets whose grades lie on {0, 1/(levels-1), ..., 1}. A finite
  /// stand-in for I^X that is closed under meet, join and complement.
  static FuzzyTopology grid(const Universe& universe, std::size_t levels);

  static constexpr std::size_t kGenerateCap = 10'000;

  const Universe& universe() const noexcept { return universe_; }
  bool is_discrete() const noexcept { return discrete_; }

  /// Throws InapplicableError for the discrete topology.
  std::span<const FuzzySet> members() const;

  /// Membership up to eps; always true for the discrete topology.
  bool contains(const FuzzySet& mu) const;

 private:
  FuzzyTopology(Universe universe, std::vector<FuzzySet> members, bool discrete)
      : universe_(std::move(universe)), members_(std::move(members)), discrete_(discrete) {}

  Universe universe_;
  std::vector<FuzzySet> members_;
  bool discrete_ = false;
};

/// Join of all members below mu. Identity on the discrete topology.
FuzzySet interior(const FuzzyTopology& topology, const FuzzySet& mu);

/// Meet of all closed sets (member complements) above mu.
FuzzySet closure(const FuzzyTopology& topology, const FuzzySet& mu);

}  // namespace faura
