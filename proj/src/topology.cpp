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

#include "faura/topology.hpp"

#include <algorithm>
#include <sstream>

#include "faura/error.hpp"

namespace faura {
namespace {

bool contains_approx(std::span<const FuzzySet> family, const FuzzySet& mu) {
  return std::any_of(family.begin(), family.end(),
                     [&](const FuzzySet& m) { return m.approx_equal(mu); });
}

void push_unique(std::vector<FuzzySet>& family, const FuzzySet& mu) {
  if (!contains_approx(family, mu)) family.push_back(mu);
}

}  // namespace

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::missing_bottom:
      os << "family does not contain the empty fuzzy set";
      break;
    case Kind::missing_top:
      os << "family does not contain the full fuzzy set";
      break;
    case Kind::meet_not_closed:
      os << "meet of members " << *first << " and " << *second << " is missing: " << missing;
      break;
    case Kind::join_not_closed:
      os << "join of members " << *first << " and " << *second << " is missing: " << missing;
      break;
  }
  return os.str();
}

AxiomVerdict verify_axioms(std::span<const FuzzySet> family) {
  if (family.empty()) throw ValidationError("cannot verify an empty family");
  const Universe& universe = family.front().universe();
  for (const auto& m : family) require_same_universe(universe, m.universe(), "topology");

  auto bottom = FuzzySet::empty(universe);
  if (!contains_approx(family, bottom)) {
    return {AxiomViolation{AxiomViolation::Kind::missing_bottom, {}, {}, bottom}};
  }
  auto top = FuzzySet::full(universe);
  if (!contains_approx(family, top)) {
    return {AxiomViolation{AxiomViolation::Kind::missing_top, {}, {}, top}};
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      auto m = meet(family[i], family[j]);
      if (!contains_approx(family, m)) {
        return {AxiomViolation{AxiomViolation::Kind::meet_not_closed, i, j, std::move(m)}};
      }
      auto jn = join(family[i], family[j]);
      if (!contains_approx(family, jn)) {
        return {AxiomViolation{AxiomViolation::Kind::join_not_closed, i, j, std::move(jn)}};
      }
    }
  }
  return {};
}

FuzzyTopology FuzzyTopology::from_members(std::vector<FuzzySet> members) {
  auto verdict = verify_axioms(members);
  if (!verdict.ok()) {
    throw ValidationError("not a fuzzy topology: " + verdict.violation->describe());
  }
  std::vector<FuzzySet> unique;
  unique.reserve(members.size());
  for (const auto& m : members) push_unique(unique, m);
  Universe universe = unique.front().universe();
  return FuzzyTopology(std::move(universe), std::move(unique), false);
}

FuzzyTopology FuzzyTopology::generate(std::span<const FuzzySet> subbasis) {
  if (subbasis.empty()) throw ValidationError("cannot generate a topology from nothing");
  const Universe& universe = subbasis.front().universe();
  std::vector<FuzzySet> family{FuzzySet::empty(universe), FuzzySet::full(universe)};
  for (const auto& s : subbasis) {
    require_same_universe(universe, s.universe(), "generate");
    push_unique(family, s);
  }
  const std::size_t seeded = family.size();

  // Pairs (i, j) with j < done are already closed; each pass only combines
  // newly added members with everything before them.
  std::size_t done = 0;
  while (done < family.size()) {
    std::size_t limit = family.size();
    for (std::size_t j = done; j < limit; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        for (auto candidate : {meet(family[i], family[j]), join(family[i], family[j])}) {
          if (contains_approx(family, candidate)) continue;
          if (family.size() - seeded >= kGenerateCap) {
            throw ValidationError("topology generation exceeded " +
                                  std::to_string(kGenerateCap) + " new members");
          }
          family.push_back(std::move(candidate));
        }
      }
    }
    done = limit;
  }
  return FuzzyTopology(universe, std::move(family), false);
}

FuzzyTopology FuzzyTopology::discrete(Universe universe) {
  return FuzzyTopology(std::move(universe), {}, true);
}

FuzzyTopology FuzzyTopology::indiscrete(const Universe& universe) {
  return FuzzyTopology(universe, {FuzzySet::empty(universe), FuzzySet::full(universe)}, false);
}

FuzzyTopology FuzzyTopology::grid(const Universe& universe, std::size_t levels) {
  if (levels < 2) throw ValidationError("grid topology needs at least two levels");
  const std::size_t n = universe.size();
  std::vector<std::size_t> digits(n, 0);
  std::vector<FuzzySet> members;
  const double step = 1.0 / static_cast<double>(levels - 1);
  while (true) {
    std::vector<Grade> grades(n);
    for (std::size_t i = 0; i < n; ++i) grades[i] = std::min(1.0, digits[i] * step);
    members.emplace_back(universe, std::move(grades));
    std::size_t pos = 0;
    while (pos < n && ++digits[pos] == levels) digits[pos++] = 0;
    if (pos == n) break;
    if (members.size() > kGenerateCap) {
      throw ValidationError("grid topology too large to enumerate");
    }
  }
  return FuzzyTopology(universe, std::move(members), false);
}

std::span<const FuzzySet> FuzzyTopology::members() const {
  if (discrete_) throw InapplicableError("the discrete topology is not enumerated");
  return members_;
}

bool FuzzyTopology::contains(const FuzzySet& mu) const {
  require_same_universe(universe_, mu.universe(), "membership");
  return discrete_ || contains_approx(members_, mu);
}

FuzzySet interior(const FuzzyTopology& topology, const FuzzySet& mu) {
  require_same_universe(topology.universe(), mu.universe(), "interior");
  if (topology.is_discrete()) return mu;
  auto out = FuzzySet::empty(mu.universe());
  for (const auto& m : topology.members()) {
    if (leq(m, mu)) out = join(out, m);
  }
  return out;
}

FuzzySet closure(const FuzzyTopology& topology, const FuzzySet& mu) {
  require_same_universe(topology.universe(), mu.universe(), "closure");
  if (topology.is_discrete()) return mu;
  auto out = FuzzySet::full(mu.universe());
  for (const auto& m : topology.members()) {
    auto closed = complement(m);
    if (leq(mu, closed)) out = meet(out, closed);
  }
  return out;
}

}  // namespace faura
