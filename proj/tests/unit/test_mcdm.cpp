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
#include "faura/io.hpp"
#include "faura/mcdm.hpp"
#include "../support/convert.hpp"
#include "../support/random_spaces.hpp"

using namespace faura;
using namespace faura::mcdm;
using faura::testing::names;

namespace {

DecisionProblem medical() {
  return io::parse_problem(io::read_json_file(FAURA_TEST_DATA_DIR "/medical_problem.json"));
}

oracle::Grid values_of(const DecisionProblem& p) {
  oracle::Grid g;
  for (std::size_t i = 0; i < p.values.rows(); ++i) {
    g.emplace_back(p.values.row(i).begin(), p.values.row(i).end());
  }
  return g;
}

oracle::Row resolved(const DecisionClass& c) {
  oracle::Row r;
  for (const auto& g : c.grades) r.push_back(g.value_or(0.0));
  return r;
}

std::size_t class_index(const DecisionProblem& p, const std::string& name) {
  for (std::size_t k = 0; k < p.classes.size(); ++k) {
    if (p.classes[k].name == name) return k;
  }
  return p.classes.size();
}

DecisionProblem tiny(std::vector<std::vector<double>> values, std::vector<DecisionClass> classes) {
  std::vector<std::string> alts;
  for (std::size_t i = 0; i < values.size(); ++i) alts.push_back("a" + std::to_string(i));
  DecisionProblem p{Universe(alts), {}, {}, {}, {}};
  const std::size_t k = values.front().size();
  for (std::size_t j = 0; j < k; ++j) {
    p.criteria.push_back({"c" + std::to_string(j), CriterionKind::benefit, 1.0 / static_cast<double>(k)});
  }
  p.values = Matrix(values.size(), k);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) p.values(i, j) = values[i][j];
  }
  p.classes = std::move(classes);
  return p;
}

}  // namespace

TEST_CASE("aura matrix of the medical problem matches the similarity oracle") {
  auto p = medical();
  auto result = run(p, 0.5);
  auto expected = oracle::similarity(values_of(p), weights_of(p));
  auto got = faura::testing::grid(result.aura);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    for (std::size_t j = 0; j < expected.size(); ++j) {
      CHECK(got[i][j] == doctest::Approx(expected[i][j]).epsilon(1e-12));
    }
  }
  CHECK(result.aura(0, 3) == doctest::Approx(0.7147619047619047).epsilon(1e-12));
  CHECK(classify_scope(result.aura).symmetric);
}

TEST_CASE("class scores and accuracy of the medical problem") {
  auto p = medical();
  auto result = run(p, 0.5);
  auto a = oracle::similarity(values_of(p), weights_of(p));
  double total = 0.0;
  for (std::size_t k = 0; k < p.classes.size(); ++k) {
    auto mu = resolved(p.classes[k]);
    auto lo = oracle::interior(a, mu);
    auto up = oracle::closure(a, mu);
    for (std::size_t i = 0; i < mu.size(); ++i) {
      CHECK(result.scores(i, k) == doctest::Approx(0.5 * lo[i] + 0.5 * up[i]).epsilon(1e-12));
    }
    total += oracle::accuracy(a, mu);
  }
  const double frozen_rho[] = {0.4202947845804989, 0.23313738561299313, 0.3365079365079365,
                               0.18822127913037007};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(accuracy(result.approximations[k]).rho == doctest::Approx(frozen_rho[k]).epsilon(1e-12));
  }
  CHECK(result.global_accuracy == doctest::Approx(total / 4.0).epsilon(1e-12));
  CHECK(result.global_accuracy == doctest::Approx(0.29454034645794963).epsilon(1e-12));

  const auto malaria = class_index(p, "Malaria");
  const auto stomach = class_index(p, "Stomach problem");
  CHECK(result.scores(2, malaria) == doctest::Approx(0.6070238095238095).epsilon(1e-12));
  const std::size_t expected[] = {malaria, stomach, malaria, malaria, malaria, stomach};
  for (std::size_t i = 0; i < 6; ++i) {
    REQUIRE(result.assignments[i].decision.has_value());
    CHECK(*result.assignments[i].decision == expected[i]);
    CHECK_FALSE(result.assignments[i].tie);
    CHECK(result.assignments[i].ranking.front() == expected[i]);
  }
  auto agree = reference_agreement(p, result.assignments);
  CHECK(agree.correct == 4);
  CHECK(agree.total == 4);
}

TEST_CASE("caution parameter extremes") {
  auto p = medical();
  auto upper_only = run(p, 0.0);
  auto lower_only = run(p, 1.0);
  for (std::size_t k = 0; k < p.classes.size(); ++k) {
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(upper_only.scores(i, k) == upper_only.approximations[k].upper[i]);
      CHECK(lower_only.scores(i, k) == lower_only.approximations[k].lower[i]);
    }
  }
  CHECK_FALSE(lower_only.assignments[4].decision.has_value());
  CHECK_FALSE(lower_only.assignments[5].decision.has_value());
  CHECK_THROWS_AS(run(p, 1.5), ValidationError);
  CHECK_THROWS_AS(run(p, -0.1), ValidationError);
}

TEST_CASE("ties, undetermined rows and degenerate sizes") {
  Matrix s(3, 3);
  s(0, 0) = 0.4; s(0, 1) = 0.4; s(0, 2) = 0.1;
  s(1, 2) = 0.9;
  auto a = classify(s);
  CHECK(*a[0].decision == 0);
  CHECK(a[0].tie);
  CHECK(*a[1].decision == 2);
  CHECK_FALSE(a[1].tie);
  CHECK_FALSE(a[2].decision.has_value());
  CHECK(a[2].ranking == std::vector<std::size_t>{0, 1, 2});

  auto single = tiny({{0.3, 0.5}}, {{"only", {0.7}}});
  auto r = run(single, 0.5);
  CHECK(r.aura(0, 0) == 1.0);
  CHECK(*r.assignments[0].decision == 0);
  CHECK(r.scores(0, 0) == doctest::Approx(0.7));

  auto one_class = tiny({{0.1}, {0.9}, {0.5}}, {{"c", {0.2, 0.8, std::nullopt}}});
  CHECK(run(one_class, 0.5).assignments.size() == 3);
}

TEST_CASE("problem validation") {
  auto p = medical();
  auto bad = p;
  bad.criteria[0].weight = 0.3;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad = p;
  bad.criteria[0].weight = -0.2;
  bad.criteria[1].weight = 0.6;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad = p;
  bad.classes[0].grades[0] = 1.2;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad = p;
  bad.classes[0].grades.pop_back();
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad = p;
  bad.reference[0] = "Flu";
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad = p;
  bad.classes.clear();
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  std::vector<Grade> w{0.5, 0.4};
  CHECK_THROWS_AS(validate_weights(w), ValidationError);
}

TEST_CASE("normalization") {
  auto p = tiny({{2, 5, 1}, {4, 5, 3}, {3, 5, 2}}, {{"c", {1, 0, 0}}});
  p.criteria[2].kind = CriterionKind::cost;
  auto f = normalize(p);
  CHECK(f(0, 0) == 0.0);
  CHECK(f(1, 0) == 1.0);
  CHECK(f(2, 0) == 0.5);
  for (std::size_t i = 0; i < 3; ++i) CHECK(f(i, 1) == 0.0);
  CHECK(f(0, 2) == 1.0);
  CHECK(f(1, 2) == 0.0);
  CHECK(f(2, 2) == 0.5);
}

TEST_CASE("decision-model properties on random problems") {
  faura::testing::Gen gen(1212);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + gen.below(6), k = 1 + gen.below(4), c = 1 + gen.below(3);
    std::vector<std::vector<double>> values(m, std::vector<double>(k));
    for (auto& r : values) {
      for (auto& v : r) v = static_cast<double>(gen.below(100));
    }
    std::vector<DecisionClass> classes;
    for (std::size_t j = 0; j < c; ++j) {
      DecisionClass dc{"d" + std::to_string(j), {}};
      for (std::size_t i = 0; i < m; ++i) {
        if (gen.coin(0.2)) {
          dc.grades.push_back(std::nullopt);
        } else {
          dc.grades.push_back(gen.grade());
        }
      }
      classes.push_back(dc);
    }
    auto p = tiny(values, classes);
    for (auto& cr : p.criteria) {
      if (gen.coin(0.3)) cr.kind = CriterionKind::cost;
    }

    auto f = normalize(p);
    for (std::size_t i = 0; i < m; ++i) {
      for (double v : f.row(i)) CHECK((v >= 0.0 && v <= 1.0));
    }
    auto renorm = p;
    renorm.values = f;
    for (auto& cr : renorm.criteria) cr.kind = CriterionKind::benefit;
    auto ff = normalize(renorm);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < k; ++j) CHECK(ff(i, j) == doctest::Approx(f(i, j)).epsilon(1e-12));
    }

    auto lo = run(p, 0.2), hi = run(p, 0.8);
    CHECK(classify_scope(lo.aura).symmetric);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < c; ++j) CHECK(hi.scores(i, j) <= lo.scores(i, j) + 1e-12);
    }

    auto zeroed = p;
    for (auto& dc : zeroed.classes) {
      for (auto& g : dc.grades) g = g.value_or(0.0);
    }
    auto z = run(zeroed, 0.5), u = run(p, 0.5);
    CHECK(z.scores == u.scores);
  }
}
