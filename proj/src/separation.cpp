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

#include "faura/separation.hpp"

#include "faura/error.hpp"

namespace faura {
namespace {

bool disjoint(const FuzzySet& mu, const FuzzySet& nu) {
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (!grade_eq(std::min(mu[i], nu[i]), 0.0)) return false;
  }
  return true;
}

bool scope_criterion(const ScopeFunction& a) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (x != y && a(y, x) != 0.0) return false;
    }
  }
  return true;
}

// Runs `find` on every ordered (or unordered) pair of distinct points and
// collects witnesses; stops at the first pair without one.
template <typename Find>
SeparationAxiom search_pairs(std::size_t n, bool ordered, Find find) {
  SeparationAxiom axiom{true, {}};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = ordered ? 0 : x + 1; y < n; ++y) {
      if (x == y) continue;
      auto w = find(x, y);
      if (!w) {
        axiom.holds = false;
        axiom.witnesses = {PairWitness{x, y, std::nullopt, std::nullopt}};
        return axiom;
      }
      axiom.witnesses.push_back(*w);
    }
  }
  return axiom;
}

}  // namespace

SeparationProfile separation_profile(const AuraSpace& space) {
  SeparationProfile profile;
  profile.t1_scope_criterion = scope_criterion(space.scope());
  if (space.topology().is_discrete()) return profile;

  const auto aura_open = aura_topology(space);
  auto members = aura_open.members();
  profile.aura_open.assign(members.begin(), members.end());
  const auto& open = profile.aura_open;
  const std::size_t n = space.universe().size();
  const std::size_t m = open.size();

  profile.t0 = search_pairs(n, false, [&](std::size_t x, std::size_t y) {
    std::optional<PairWitness> w;
    for (std::size_t i = 0; i < m && !w; ++i) {
      if (!grade_eq(open[i][x], open[i][y])) w = PairWitness{x, y, i, std::nullopt};
    }
    return w;
  });

  // mu(x) = 1, mu(y) = 0 for the ordered pair; the reverse pair supplies nu.
  profile.t1 = search_pairs(n, true, [&](std::size_t x, std::size_t y) {
    std::optional<PairWitness> w;
    for (std::size_t i = 0; i < m && !w; ++i) {
      if (open[i][x] == 1.0 && grade_eq(open[i][y], 0.0)) w = PairWitness{x, y, i, std::nullopt};
    }
    return w;
  });

  profile.t2 = search_pairs(n, false, [&](std::size_t x, std::size_t y) {
    std::optional<PairWitness> w;
    for (std::size_t i = 0; i < m && !w; ++i) {
      if (open[i][x] != 1.0) continue;
      for (std::size_t j = 0; j < m && !w; ++j) {
        if (open[j][y] == 1.0 && disjoint(open[i], open[j])) w = PairWitness{x, y, i, j};
      }
    }
    return w;
  });

  bool regular = true;
  for (std::size_t c = 0; c < m && regular; ++c) {
    auto gamma = complement(open[c]);
    for (std::size_t x = 0; x < n && regular; ++x) {
      if (gamma[x] != 0.0) continue;
      std::optional<RegularWitness> w;
      for (std::size_t i = 0; i < m && !w; ++i) {
        if (open[i][x] != 1.0) continue;
        for (std::size_t j = 0; j < m && !w; ++j) {
          if (leq(gamma, open[j]) && disjoint(open[i], open[j])) w = RegularWitness{c, x, i, j};
        }
      }
      if (w) {
        profile.regular_witnesses.push_back(*w);
      } else {
        regular = false;
        profile.regular_witnesses = {RegularWitness{c, x, std::nullopt, std::nullopt}};
      }
    }
  }
  profile.regular = regular;

  const bool t0 = profile.t0->holds, t1 = profile.t1->holds, t2 = profile.t2->holds;
  if ((t2 && !t1) || (t1 && !t0)) {
    throw InternalError("separation profile breaks the T2 => T1 => T0 chain");
  }
  return profile;
}

FuzzyPointCheck t1_fuzzy_point_check(const AuraSpace& space) {
  FuzzyPointCheck check;
  check.scope_criterion = scope_criterion(space.scope());
  check.points_closed = true;
  for (std::size_t x = 0; x < space.universe().size() && check.points_closed; ++x) {
    auto chi = FuzzySet::point(space.universe(), x);
    check.points_closed = aura_closure(space, chi).approx_equal(chi);
  }
  return check;
}

bool scope_rows_distinct(const ScopeFunction& scope) {
  for (std::size_t x = 0; x < scope.size(); ++x) {
    for (std::size_t y = x + 1; y < scope.size(); ++y) {
      if (scope.aura(x).approx_equal(scope.aura(y))) return false;
    }
  }
  return true;
}

}  // namespace faura
