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

#include <filesystem>
#include <algorithm>
#include <fstream>

#include "faura/error.hpp"
#include "faura/io.hpp"
#include "../support/convert.hpp"
#include "../support/random_spaces.hpp"

using namespace faura;
using faura::testing::make;
using faura::testing::names;

namespace {

const std::string kData = FAURA_TEST_DATA_DIR;

std::filesystem::path scratch(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "faura_io_test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("fuzzy set round trip") {
  auto u = names({"p", "q"});
  auto mu = make(u, {0.1, 0.7});
  auto back = io::parse_fuzzy_set(io::to_json(mu));
  CHECK(back == mu);
  CHECK(back.universe() == u);
  CHECK_THROWS_AS(io::parse_fuzzy_set(io::to_json(mu), names({"p", "r"})), Error);
  CHECK_THROWS_AS(io::parse_fuzzy_set(io::Json::parse(R"({"universe":["p"],"grades":[1.4]})")),
                  ValidationError);
  CHECK_THROWS_AS(io::parse_fuzzy_set(io::Json::parse(R"({"universe":["p","q"],"grades":[0.1]})")),
                  ValidationError);
  CHECK_THROWS_AS(io::parse_fuzzy_set(io::Json::parse(R"({"grades":[0.1]})")), ValidationError);
  CHECK_THROWS_AS(io::parse_fuzzy_set(io::Json::parse(R"({"universe":["p"],"grades":["x"]})")),
                  ValidationError);
}

TEST_CASE("space round trip on random spaces") {
  faura::testing::Gen gen(1313);
  for (int i = 0; i < 50; ++i) {
    auto space = gen.space();
    auto text = io::dump(io::to_json(space));
    auto back = io::parse_space(io::Json::parse(text));
    CHECK(back.universe() == space.universe());
    CHECK(std::ranges::equal(back.scope().matrix(), space.scope().matrix()));
    CHECK(back.topology().members().size() == space.topology().members().size());
    for (const auto& m : space.topology().members()) CHECK(back.topology().contains(m));
    CHECK(io::dump(io::to_json(back)) == text);
  }
}

TEST_CASE("space fixtures load") {
  auto space = io::parse_space(io::read_json_file(kData + "/spaces/nonidempotent_closure.json"));
  CHECK(space.topology().is_discrete());
  CHECK(space.scope()(0, 1) == 0.8);
  auto grid = io::parse_space(io::read_json_file(kData + "/spaces/trivial_scope_three_points.json"));
  CHECK(grid.topology().members().size() == 27);
  CHECK_THROWS_AS(io::parse_space(io::read_json_file(kData + "/spaces/not_meet_closed.json")),
                  ValidationError);
  CHECK_THROWS_AS(io::read_json_file(kData + "/missing.json"), Error);
  CHECK_THROWS_AS(io::read_json_file(scratch("broken.json", "{\"universe\": [")), ValidationError);
}

TEST_CASE("strict mode upgrade") {
  auto json = io::Json::parse(R"({"universe":["p","q"],"topology":{"members":[[0,0],[1,1]]},
                                  "scope":{"p":[1,0],"q":[0,1]}})");
  CHECK_NOTHROW(io::parse_space(json));
  CHECK_THROWS_AS(io::parse_space(json, true), ValidationError);
  json["mode"] = "strict";
  CHECK_THROWS_AS(io::parse_space(json), ValidationError);
  json["mode"] = "loose";
  CHECK_THROWS_AS(io::parse_space(json), ValidationError);
}

TEST_CASE("point map round trip") {
  auto f = io::parse_point_map(io::read_json_file(kData + "/spaces/identity_map.json"));
  CHECK(f.source().size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(f(i) == i);
  auto back = io::parse_point_map(io::to_json(f));
  CHECK(io::dump(io::to_json(back)) == io::dump(io::to_json(f)));
}

TEST_CASE("CSV ingestion agrees with the JSON problem") {
  auto json = io::parse_problem(io::read_json_file(kData + "/medical_problem.json"));
  auto csv = io::load_problem_csv(kData + "/medical_matrix.csv", kData + "/medical_classes.csv");
  CHECK(csv.alternatives == json.alternatives);
  CHECK(csv.values == json.values);
  REQUIRE(csv.classes.size() == json.classes.size());
  for (std::size_t k = 0; k < csv.classes.size(); ++k) {
    CHECK(csv.classes[k].name == json.classes[k].name);
    CHECK(csv.classes[k].grades == json.classes[k].grades);
  }
  for (std::size_t j = 0; j < csv.criteria.size(); ++j) {
    CHECK(csv.criteria[j].name == json.criteria[j].name);
    CHECK(csv.criteria[j].weight == doctest::Approx(0.2));
  }
  auto a = mcdm::run(json, 0.5), b = mcdm::run(csv, 0.5);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t k = 0; k < 4; ++k) CHECK(a.scores(i, k) == doctest::Approx(b.scores(i, k)));
  }
  std::vector<std::string> cost{"Cough"};
  auto with_cost = io::load_problem_csv(kData + "/medical_matrix.csv", kData + "/medical_classes.csv",
                                        std::vector<Grade>{0.1, 0.2, 0.3, 0.2, 0.2}, cost);
  CHECK(with_cost.criteria[3].kind == mcdm::CriterionKind::cost);
  CHECK(with_cost.criteria[2].weight == 0.3);
}

TEST_CASE("malformed CSV input") {
  auto classes = scratch("classes.csv", "alternative,A\na,0.5\nb,0.1\n");
  auto ragged = scratch("ragged.csv", "alternative,c1,c2\na,1,2\nb,3\n");
  CHECK_THROWS_AS(io::load_problem_csv(ragged, classes), ValidationError);
  auto text = scratch("text.csv", "alternative,c1\na,hot\nb,3\n");
  CHECK_THROWS_AS(io::load_problem_csv(text, classes), ValidationError);
  auto good = scratch("good.csv", "alternative,c1\na,1\nb,3\n");
  std::vector<std::string> cost{"c9"};
  CHECK_THROWS_AS(io::load_problem_csv(good, classes, std::nullopt, cost), ValidationError);
  CHECK_THROWS_AS(io::load_problem_csv(good, classes, std::vector<Grade>{0.5}), ValidationError);
  auto other = scratch("other.csv", "alternative,A\na,0.5\nc,0.1\n");
  CHECK_THROWS_AS(io::load_problem_csv(good, other), ValidationError);
  CHECK(io::split_csv_line("a,\"b,c\",d") == std::vector<std::string>{"a", "b,c", "d"});
}

TEST_CASE("problem JSON errors and run output") {
  auto json = io::read_json_file(kData + "/medical_problem.json");
  auto bad = json;
  bad["criteria"][0]["kind"] = "neutral";
  CHECK_THROWS_AS(io::parse_problem(bad), ValidationError);
  bad = json;
  bad["matrix"][0].erase(0);
  CHECK_THROWS_AS(io::parse_problem(bad), ValidationError);
  bad = json;
  bad["reference"]["p9"] = "Malaria";
  CHECK_THROWS_AS(io::parse_problem(bad), ValidationError);

  auto problem = io::parse_problem(json);
  auto out = io::to_json(mcdm::run(problem, 0.5), problem);
  CHECK(out["classification"]["p2"]["class"] == "Stomach problem");
  CHECK(out["reference"]["correct"] == 4);
  CHECK(io::dump(out) == io::dump(io::to_json(mcdm::run(problem, 0.5), problem)));
  auto undecided = io::to_json(mcdm::run(problem, 1.0), problem);
  CHECK(undecided["classification"]["p5"]["class"] == "Undetermined");

  auto scenarios = io::parse_scenarios(io::read_json_file(kData + "/weight_scenarios.json"));
  CHECK(scenarios.size() == 5);
  CHECK_THROWS_AS(io::parse_scenarios(io::Json::parse(R"({"scenarios":[{"label":"x"}]})")),
                  ValidationError);
}
