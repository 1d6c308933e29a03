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

#include "doctest.h"

#include "faura/error.hpp"
#include "faura/topology.hpp"
#include "../support/convert.hpp"
#include "../support/random_spaces.hpp"

using namespace faura;
using faura::testing::make;
using faura::testing::names;

namespace {

std::vector<FuzzySet> four_point_family(const Universe& u) {
  return {FuzzySet::empty(u), FuzzySet::full(u), make(u, {0.8, 0, 0.5, 0}),
          make(u, {0, 0.7, 0, 0.6}), make(u, {0.8, 0.7, 0.5, 0.6})};
}

}  // namespace

TEST_CASE("axiom verification accepts a closed family") {
  auto u = names({"p", "q", "r", "s"});
  auto family = four_point_family(u);
  CHECK(verify_axioms(family).ok());
  std::vector<FuzzySet> indiscrete{FuzzySet::empty(u), FuzzySet::full(u)};
  CHECK(verify_axioms(indiscrete).ok());
}

TEST_CASE("axiom verification names the missing meet") {
  auto u = names({"p", "q", "r"});
  std::vector<FuzzySet> family{FuzzySet::empty(u), FuzzySet::full(u), make(u, {1, 0.4, 0}),
                               make(u, {0.6, 1, 0.3}), make(u, {1, 1, 0.3})};
  auto verdict = verify_axioms(family);
  REQUIRE_FALSE(verdict.ok());
  CHECK(verdict.violation->kind == AxiomViolation::Kind::meet_not_closed);
  CHECK(verdict.violation->first == 2u);
  CHECK(verdict.violation->second == 3u);
  CHECK(verdict.violation->missing == make(u, {0.6, 0.4, 0}));
  CHECK_THROWS_AS(FuzzyTopology::from_members(family), ValidationError);
}

TEST_CASE("axiom verification reports missing bounds") {
  auto u = names({"p", "q"});
  std::vector<FuzzySet> no_bottom{FuzzySet::full(u)};
  CHECK(verify_axioms(no_bottom).violation->kind == AxiomViolation::Kind::missing_bottom);
  std::vector<FuzzySet> no_top{FuzzySet::empty(u)};
  CHECK(verify_axioms(no_top).violation->kind == AxiomViolation::Kind::missing_top);
  std::vector<FuzzySet> none;
  CHECK_THROWS_AS(verify_axioms(none), ValidationError);
  std::vector<FuzzySet> no_join{FuzzySet::empty(u), FuzzySet::full(u), make(u, {1, 0}),
                                make(u, {0, 0.5})};
  CHECK(verify_axioms(no_join).violation->kind == AxiomViolation::Kind::join_not_closed);
}

TEST_CASE("generate repairs a family that is not meet-closed") {
  auto u = names({"p", "q", "r"});
  std::vector<FuzzySet> sub{make(u, {1, 0.4, 0}), make(u, {0.6, 1, 0.3})};
  auto top = FuzzyTopology::generate(sub);
  CHECK(top.members().size() == 6);
  CHECK(top.contains(make(u, {0.6, 0.4, 0})));
  CHECK(top.contains(make(u, {1, 1, 0.3})));

  std::vector<FuzzySet> again(top.members().begin(), top.members().end());
  CHECK(FuzzyTopology::generate(again).members().size() == 6);

  std::vector<FuzzySet> top_only{FuzzySet::full(u)};
  CHECK(FuzzyTopology::generate(top_only).members().size() == 2);
  std::vector<FuzzySet> none;
  CHECK_THROWS_AS(FuzzyTopology::generate(none), ValidationError);
}

TEST_CASE("from_members drops near duplicates") {
  auto u = names({"p", "q"});
  std::vector<FuzzySet> family{FuzzySet::empty(u), FuzzySet::full(u), make(u, {0.5, 0.5}),
                               make(u, {0.5 + 1e-12, 0.5})};
  CHECK(FuzzyTopology::from_members(family).members().size() == 3);
}

TEST_CASE("interior and closure on a small topology") {
  auto u = names({"p", "q", "r", "s"});
  auto top = FuzzyTopology::from_members(four_point_family(u));
  CHECK(interior(top, make(u, {0.7, 0.5, 0, 0})) == FuzzySet::empty(u));
  CHECK(interior(top, make(u, {0.7, 0.5, 0.3, 0.4})) == FuzzySet::empty(u));
  CHECK(interior(top, FuzzySet::full(u)) == FuzzySet::full(u));
  CHECK(closure(top, FuzzySet::empty(u)) == FuzzySet::empty(u));

  auto indiscrete = FuzzyTopology::indiscrete(u);
  CHECK(closure(indiscrete, make(u, {0, 0.1, 0, 0})) == FuzzySet::full(u));
  CHECK(interior(indiscrete, make(u, {1, 1, 1, 0.9})) == FuzzySet::empty(u));
}

TEST_CASE("the discrete marker is not enumerable") {
  auto u = names({"p", "q"});
  auto top = FuzzyTopology::discrete(u);
  CHECK(top.is_discrete());
  CHECK_THROWS_AS(top.members(), InapplicableError);
  auto mu = make(u, {0.3, 0.9});
  CHECK(interior(top, mu) == mu);
  CHECK(closure(top, mu) == mu);
  CHECK(top.contains(mu));
}

TEST_CASE("grid topologies") {
  auto u = names({"p", "q"});
  auto top = FuzzyTopology::grid(u, 3);
  CHECK(top.members().size() == 9);
  CHECK(top.contains(make(u, {0.5, 1})));
  CHECK_FALSE(top.contains(make(u, {0.4, 1})));
}

TEST_CASE("interior and closure laws on random topologies") {
  faura::testing::Gen gen(202);
  for (int i = 0; i < 200; ++i) {
    auto u = gen.universe();
    auto top = gen.topology(u);
    CHECK(verify_axioms(top.members()).ok());
    auto mu = gen.set(u), nu = gen.set(u);
    auto in = interior(top, mu);
    auto cl = closure(top, mu);
    CHECK(leq(in, mu));
    CHECK(leq(mu, cl));
    CHECK(interior(top, in) == in);
    CHECK(closure(top, cl).approx_equal(cl));
    CHECK(interior(top, meet(mu, nu)) == meet(in, interior(top, nu)));
    CHECK(closure(top, join(mu, nu)).approx_equal(join(cl, closure(top, nu))));
    CHECK(top.contains(in));
    CHECK(top.contains(complement(cl)));
    CHECK(cl.approx_equal(complement(interior(top, complement(mu)))));
    CHECK(faura::testing::row(in) ==
          faura::oracle::topological_interior(faura::testing::grid(top), faura::testing::row(mu)));
  }
}
