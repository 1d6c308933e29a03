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

#include <algorithm>

#include "faura/error.hpp"
#include "faura/lattice.hpp"
#include "../support/convert.hpp"
#include "../support/random_spaces.hpp"

using namespace faura;
using faura::testing::make;
using faura::testing::names;

TEST_CASE("meet and join are pointwise min and max") {
  auto u = names({"p", "q", "r"});
  auto a = make(u, {1, 0.4, 0});
  auto b = make(u, {0.6, 1, 0.3});
  CHECK(meet(a, b) == make(u, {0.6, 0.4, 0}));
  CHECK(join(a, b) == make(u, {1, 1, 0.3}));
  CHECK(meet(a, FuzzySet::full(u)) == a);
  CHECK(meet(a, FuzzySet::empty(u)) == FuzzySet::empty(u));
  CHECK(join(a, FuzzySet::empty(u)) == a);
  CHECK(join(a, a) == a);
}

TEST_CASE("complement") {
  auto u = names({"p", "q", "r", "s"});
  CHECK(complement(make(u, {0.7, 0.5, 0, 0})).approx_equal(make(u, {0.3, 0.5, 1, 1})));
  CHECK(complement(FuzzySet::empty(u)) == FuzzySet::full(u));
  auto mu = make(u, {0.2, 0.5, 1, 0});
  CHECK(complement(complement(mu)).approx_equal(mu));
}

TEST_CASE("order") {
  auto u = names({"p", "q", "r", "s"});
  auto mu = make(u, {0.7, 0.5, 0.3, 0.4});
  CHECK(leq(FuzzySet::empty(u), mu));
  CHECK_FALSE(leq(make(u, {0, 0.7, 0, 0.6}), mu));
  CHECK(leq(mu, mu));
  CHECK(leq(make(u, {0.7 + 1e-12, 0.5, 0.3, 0.4}), mu));
}

TEST_CASE("alpha cuts") {
  auto u = names({"p", "q", "r"});
  auto mu = make(u, {0, 0.6, 0.6});
  CHECK(alpha_cut(mu, 0.6) == PointSet{1, 2});
  CHECK(alpha_cut(mu, 0.6, CutKind::strict).empty());
  CHECK(alpha_cut(mu, 0.0) == PointSet{0, 1, 2});
  CHECK(alpha_cut(FuzzySet::full(u), 1.0, CutKind::strict).empty());
}

TEST_CASE("constant and characteristic sets") {
  auto u = names({"p", "q", "r"});
  CHECK(FuzzySet::constant(u, 0) == FuzzySet::empty(u));
  CHECK(FuzzySet::characteristic(u, PointSet{2}) == make(u, {0, 0, 1}));
  CHECK(FuzzySet::characteristic(u, PointSet{0, 1, 2}) == FuzzySet::full(u));
  std::vector<std::string> r{"r"};
  CHECK(FuzzySet::characteristic(u, r) == make(u, {0, 0, 1}));
  std::vector<std::string> bad{"z"};
  CHECK_THROWS_AS(FuzzySet::characteristic(u, bad), ValidationError);
  CHECK_THROWS_AS(FuzzySet::characteristic(u, PointSet{3}), ValidationError);
}

TEST_CASE("validation") {
  auto u = names({"p", "q"});
  CHECK_THROWS_AS(make(u, {0.5}), ValidationError);
  CHECK_THROWS_AS(make(u, {0.5, 1.1}), ValidationError);
  CHECK_THROWS_AS(make(u, {-0.2, 0.1}), ValidationError);
  CHECK(make(u, {-1e-12, 1 + 1e-12}) == make(u, {0, 1}));
  CHECK_THROWS_AS(Universe(std::vector<std::string>{}), ValidationError);
  CHECK_THROWS_AS(Universe(std::vector<std::string>{"p", "p"}), ValidationError);
  auto other = names({"a", "b"});
  CHECK_THROWS_AS(meet(make(u, {0, 0}), make(other, {0, 0})), UniverseMismatch);
  CHECK_THROWS_AS(leq(make(u, {0, 0}), make(other, {0, 0})), UniverseMismatch);
}

TEST_CASE("a one-point universe is legal") {
  auto u = names({"only"});
  auto mu = make(u, {0.4});
  CHECK(join(mu, complement(mu)).approx_equal(make(u, {0.6})));
  CHECK(sum(mu) == doctest::Approx(0.4));
  CHECK(supremum(mu) == 0.4);
  CHECK(infimum(mu) == 0.4);
}

TEST_CASE("lattice laws on random triples") {
  faura::testing::Gen gen(101);
  for (int i = 0; i < 300; ++i) {
    auto u = gen.universe();
    auto a = gen.set(u), b = gen.set(u), c = gen.set(u);
    CHECK(meet(a, b) == meet(b, a));
    CHECK(join(a, b) == join(b, a));
    CHECK(meet(a, meet(b, c)) == meet(meet(a, b), c));
    CHECK(join(a, join(b, c)) == join(join(a, b), c));
    CHECK(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)));
    CHECK(join(a, meet(b, c)) == meet(join(a, b), join(a, c)));
    CHECK(meet(a, join(a, b)) == a);
    CHECK(join(a, meet(a, b)) == a);
    CHECK(complement(join(a, b)) == meet(complement(a), complement(b)));
    CHECK(complement(meet(a, b)) == join(complement(a), complement(b)));
    CHECK(leq(a, b) == (meet(a, b) == a));
    const Grade lo = gen.grade(), hi = gen.grade();
    auto small = alpha_cut(a, std::max(lo, hi));
    auto large = alpha_cut(a, std::min(lo, hi));
    CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
  }
}
