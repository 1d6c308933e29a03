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

#include "faura/openness.hpp"

#include <sstream>

#include "faura/error.hpp"

namespace faura {

const char* to_string(CheckVerdict::Status status) {
  switch (status) {
    case CheckVerdict::Status::consistent: return "consistent";
    case CheckVerdict::Status::violated: return "violated";
    case CheckVerdict::Status::inapplicable: return "inapplicable";
  }
  return "unknown";
}

OpennessProfile openness_profile(const AuraSpace& space, const FuzzySet& mu) {
  require_same_universe(space.universe(), mu.universe(), "openness");
  OpennessProfile p;
  p.open = space.topology().contains(mu);
  p.a_open = is_a_open(space, mu);

  if (space.topology().is_discrete()) {
    // int is the identity, so every class reduces to mu <= cl_a(mu).
    p.semi = p.pre = p.alpha = p.beta = p.b = true;
    return p;
  }

  const auto& top = space.topology();
  auto int_mu = interior(top, mu);
  auto cl_int = aura_closure(space, int_mu);
  auto cl_mu = aura_closure(space, mu);
  auto int_cl = interior(top, cl_mu);

  p.semi = leq(mu, cl_int);
  p.pre = leq(mu, int_cl);
  p.alpha = leq(mu, interior(top, cl_int));
  p.beta = leq(mu, aura_closure(space, int_cl));
  p.b = leq(mu, join(cl_int, int_cl));
  return p;
}

std::optional<std::string> hierarchy_violation(const OpennessProfile& p) {
  if (p.open && !p.alpha) return "open but not a-alpha-open";
  if (p.alpha && !p.semi) return "a-alpha-open but not a-semi-open";
  if (p.alpha && !p.pre) return "a-alpha-open but not a-pre-open";
  if ((p.semi || p.pre) && !p.b) return "a-semi-open or a-pre-open but not a-b-open";
  if (p.b && !p.beta) return "a-b-open but not a-beta-open";
  return std::nullopt;
}

CheckVerdict hierarchy_check(const AuraSpace& space, std::span<const FuzzySet> samples) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (auto why = hierarchy_violation(openness_profile(space, samples[i]))) {
      std::ostringstream os;
      os << "sample " << i << ": " << *why;
      return CheckVerdict::violated(os.str(), samples[i]);
    }
  }
  return CheckVerdict::consistent();
}

bool is_semi_closed(const AuraSpace& space, const FuzzySet& gamma) {
  return leq(aura_interior(space, closure(space.topology(), gamma)), gamma);
}

}  // namespace faura
