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

#include "faura/morphisms.hpp"

#include <sstream>

#include "faura/error.hpp"

namespace faura {

PointMap::PointMap(Universe source, Universe target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_.size()) {
    throw ValidationError("point map must assign every source point");
  }
  for (std::size_t y : assignment_) {
    if (y >= target_.size()) throw ValidationError("point map assigns a point outside the target");
  }
}

PointMap PointMap::from_names(Universe source, Universe target,
                              const std::map<std::string, std::string>& assignment) {
  std::vector<std::size_t> out(source.size());
  std::vector<bool> seen(source.size(), false);
  for (const auto& [from, to] : assignment) {
    auto x = source.index_of(from);
    out[x] = target.index_of(to);
    seen[x] = true;
  }
  for (std::size_t x = 0; x < seen.size(); ++x) {
    if (!seen[x]) throw ValidationError("point map leaves '" + source.name(x) + "' unassigned");
  }
  return PointMap(std::move(source), std::move(target), std::move(out));
}

PointMap PointMap::identity(const Universe& universe) {
  std::vector<std::size_t> out(universe.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return PointMap(universe, universe, std::move(out));
}

PointMap PointMap::constant(Universe source, Universe target, std::size_t value) {
  std::vector<std::size_t> out(source.size(), value);
  return PointMap(std::move(source), std::move(target), std::move(out));
}

FuzzySet preimage(const PointMap& f, const FuzzySet& nu) {
  require_same_universe(f.target(), nu.universe(), "preimage");
  std::vector<Grade> out(f.source().size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = nu[f(x)];
  return FuzzySet(f.source(), std::move(out));
}

PointMap compose(const PointMap& f, const PointMap& g) {
  require_same_universe(f.target(), g.source(), "composition");
  std::vector<std::size_t> out(f.source().size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = g(f(x));
  return PointMap(f.source(), g.target(), std::move(out));
}

ContinuityProfile continuity_profile(const PointMap& f, const AuraSpace& source,
                                     const AuraSpace& target) {
  require_same_universe(f.source(), source.universe(), "continuity source");
  require_same_universe(f.target(), target.universe(), "continuity target");
  if (target.topology().is_discrete()) {
    throw InapplicableError("continuity needs an enumerated target topology");
  }

  ContinuityProfile c{true, true, true, true, true, true, true};
  for (const auto& nu : target.topology().members()) {
    auto mu = preimage(f, nu);
    auto p = openness_profile(source, mu);
    c.continuous = c.continuous && p.open;
    c.semi = c.semi && p.semi;
    c.pre = c.pre && p.pre;
    c.alpha = c.alpha && p.alpha;
    c.beta = c.beta && p.beta;
    c.b = c.b && p.b;
  }
  const auto aura_open = aura_topology(target);
  for (const auto& nu : aura_open.members()) {
    if (!in_aura_topology(source, preimage(f, nu))) {
      c.a_continuous = false;
      break;
    }
  }
  return c;
}

bool semi_continuous_by_closed_sets(const PointMap& f, const AuraSpace& source,
                                    const AuraSpace& target) {
  for (const auto& nu : target.topology().members()) {
    if (!is_semi_closed(source, preimage(f, complement(nu)))) return false;
  }
  return true;
}

CheckVerdict continuity_chain_check(const ContinuityProfile& c) {
  if (c.continuous && !c.alpha) return CheckVerdict::violated("continuous but not a-alpha");
  if (c.alpha && !(c.semi && c.pre)) {
    return CheckVerdict::violated("a-alpha but not both a-semi and a-pre");
  }
  if ((c.semi || c.pre) && !c.b) return CheckVerdict::violated("a-semi or a-pre but not a-b");
  if (c.b && !c.beta) return CheckVerdict::violated("a-b but not a-beta");
  return CheckVerdict::consistent();
}

CheckVerdict decomposition_check(const PointMap& f, const AuraSpace& source,
                                 const AuraSpace& target) {
  if (!classify_scope(source).transitive) {
    return CheckVerdict::inapplicable("source scope is not transitive");
  }
  auto c = continuity_profile(f, source, target);
  if (c.alpha == (c.semi && c.pre)) return CheckVerdict::consistent();

  // Locate the preimage that separates the two sides.
  for (const auto& nu : target.topology().members()) {
    auto mu = preimage(f, nu);
    auto p = openness_profile(source, mu);
    if (p.alpha != (p.semi && p.pre)) {
      return CheckVerdict::violated("a-alpha differs from a-semi & a-pre on a preimage", mu);
    }
  }
  return CheckVerdict::violated("a-alpha differs from a-semi & a-pre");
}

CheckVerdict composition_check(const PointMap& f, const PointMap& g, const AuraSpace& x,
                               const AuraSpace& y, const AuraSpace& z) {
  require_same_universe(f.target(), g.source(), "composition chain");
  auto gf = compose(f, g);
  auto pf = continuity_profile(f, x, y);
  auto pg = continuity_profile(g, y, z);
  auto pgf = continuity_profile(gf, x, z);
  if (pf.a_continuous && pg.a_continuous && !pgf.a_continuous) {
    return CheckVerdict::violated("composite of a-continuous maps is not a-continuous");
  }
  if (pf.semi && pg.continuous && !pgf.semi) {
    return CheckVerdict::violated(
        "a-semi-continuous followed by continuous is not a-semi-continuous");
  }
  return CheckVerdict::consistent();
}

}  // namespace faura
