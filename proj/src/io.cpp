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

#include "faura/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <boost/tokenizer.hpp>

#include "faura/error.hpp"

namespace faura::io {
namespace {

// Runs `body`, turning JSON type and key errors into ValidationError.
template <typename F>
auto guarded(std::string_view what, F body) -> decltype(body()) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw ValidationError("malformed " + std::string(what) + ": " + e.what());
  }
}

Universe parse_universe(const Json& json) {
  return Universe(json.get<std::vector<std::string>>());
}

Json universe_json(const Universe& u) {
  return Json(std::vector<std::string>(u.points().begin(), u.points().end()));
}

Json grades_json(std::span<const Grade> grades) {
  return Json(std::vector<Grade>(grades.begin(), grades.end()));
}

Json witness_json(const PairWitness& w, const Universe& u) {
  Json j;
  j["x"] = u.name(w.x);
  j["y"] = u.name(w.y);
  j["first"] = w.first ? Json(*w.first) : Json(nullptr);
  j["second"] = w.second ? Json(*w.second) : Json(nullptr);
  return j;
}

Json axiom_json(const std::optional<SeparationAxiom>& axiom, const Universe& u) {
  if (!axiom) return Json(nullptr);
  Json j;
  j["holds"] = axiom->holds;
  Json list = Json::array();
  for (const auto& w : axiom->witnesses) list.push_back(witness_json(w, u));
  j[axiom->holds ? "witnesses" : "violation"] = axiom->holds ? list : list.front();
  return j;
}

Json matrix_json(const mcdm::Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(grades_json(m.row(i)));
  return rows;
}

Json assignment_json(const mcdm::Assignment& a, const mcdm::DecisionProblem& problem) {
  Json j;
  j["class"] = a.decision ? Json(problem.classes[*a.decision].name) : Json("Undetermined");
  j["tie"] = a.tie;
  Json ranking = Json::array();
  for (std::size_t k : a.ranking) ranking.push_back(problem.classes[k].name);
  j["ranking"] = ranking;
  return j;
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.size() < 2) throw ValidationError(path.string() + " needs a header and data rows");
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) {
      throw ValidationError(path.string() + ": ragged CSV row");
    }
  }
  return rows;
}

double parse_number(const std::string& cell) {
  try {
    std::size_t used = 0;
    double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::logic_error&) {
    throw ValidationError("not a number: '" + cell + "'");
  }
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
  boost::tokenizer<boost::escaped_list_separator<char>> tok(line);
  std::vector<std::string> out;
  for (auto cell : tok) {
    auto first = cell.find_first_not_of(" \t");
    auto last = cell.find_last_not_of(" \t");
    out.push_back(first == std::string::npos ? "" : cell.substr(first, last - first + 1));
  }
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return guarded("JSON file " + path.string(), [&] { return Json::parse(in); });
}

std::string dump(const Json& json) { return json.dump(2); }

FuzzySet parse_fuzzy_set(const Json& json) {
  return guarded("fuzzy set", [&] {
    return FuzzySet(parse_universe(json.at("universe")),
                    json.at("grades").get<std::vector<Grade>>());
  });
}

FuzzySet parse_fuzzy_set(const Json& json, const Universe& expected) {
  auto mu = parse_fuzzy_set(json);
  require_same_universe(expected, mu.universe(), "fuzzy set input");
  return FuzzySet(expected, std::vector<Grade>(mu.grades().begin(), mu.grades().end()));
}

Json to_json(const FuzzySet& mu) {
  Json j;
  j["universe"] = universe_json(mu.universe());
  j["grades"] = grades_json(mu.grades());
  return j;
}

FuzzyTopology parse_topology(const Json& json, const std::optional<Universe>& universe) {
  return guarded("topology", [&] {
    Universe u = universe ? *universe : parse_universe(json.at("universe"));
    if (universe && json.contains("universe")) {
      require_same_universe(u, parse_universe(json.at("universe")), "topology");
    }
    if (json.value("discrete", false)) return FuzzyTopology::discrete(u);
    std::vector<FuzzySet> members;
    for (const auto& row : json.at("members")) {
      members.emplace_back(u, row.get<std::vector<Grade>>());
    }
    return FuzzyTopology::from_members(std::move(members));
  });
}

Json to_json(const FuzzyTopology& topology) {
  Json j;
  j["universe"] = universe_json(topology.universe());
  if (topology.is_discrete()) {
    j["discrete"] = true;
    return j;
  }
  Json members = Json::array();
  for (const auto& m : topology.members()) members.push_back(grades_json(m.grades()));
  j["members"] = members;
  return j;
}

AuraSpace parse_space(const Json& json, bool force_strict) {
  return guarded("aura space", [&] {
    Universe u = parse_universe(json.at("universe"));
    auto topology = parse_topology(json.at("topology"), u);
    const auto& scope = json.at("scope");
    if (scope.size() != u.size()) throw ValidationError("scope must list one row per point");
    std::vector<Grade> matrix;
    for (const auto& name : u.points()) {
      if (!scope.contains(name)) throw ValidationError("scope has no row for '" + name + "'");
      auto row = scope.at(name).get<std::vector<Grade>>();
      if (row.size() != u.size()) {
        throw ValidationError("scope row for '" + name + "' has the wrong length");
      }
      matrix.insert(matrix.end(), row.begin(), row.end());
    }
    const std::string mode = json.value("mode", "lenient");
    if (mode != "lenient" && mode != "strict") {
      throw ValidationError("mode must be 'lenient' or 'strict'");
    }
    auto validation =
        force_strict || mode == "strict" ? ValidationMode::strict : ValidationMode::lenient;
    return AuraSpace(std::move(topology), ScopeFunction(u, std::move(matrix)), validation);
  });
}

Json to_json(const AuraSpace& space) {
  Json j;
  j["universe"] = universe_json(space.universe());
  Json top = to_json(space.topology());
  top.erase("universe");
  j["topology"] = top;
  Json scope;
  for (std::size_t x = 0; x < space.scope().size(); ++x) {
    scope[space.universe().name(x)] = grades_json(space.scope().aura(x).grades());
  }
  j["scope"] = scope;
  j["mode"] = space.mode() == ValidationMode::strict ? "strict" : "lenient";
  return j;
}

PointMap parse_point_map(const Json& json) {
  return guarded("point map", [&] {
    return PointMap::from_names(parse_universe(json.at("source")),
                                parse_universe(json.at("target")),
                                json.at("map").get<std::map<std::string, std::string>>());
  });
}

Json to_json(const PointMap& f) {
  Json j;
  j["source"] = universe_json(f.source());
  j["target"] = universe_json(f.target());
  Json map;
  for (std::size_t x = 0; x < f.source().size(); ++x) {
    map[f.source().name(x)] = f.target().name(f(x));
  }
  j["map"] = map;
  return j;
}

Json to_json(const OpennessProfile& p) {
  Json j;
  j["open"] = p.open;
  j["a_open"] = p.a_open;
  j["semi"] = p.semi;
  j["pre"] = p.pre;
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  j["b"] = p.b;
  return j;
}

Json to_json(const ContinuityProfile& c) {
  Json j;
  j["continuous"] = c.continuous;
  j["a_continuous"] = c.a_continuous;
  j["semi"] = c.semi;
  j["pre"] = c.pre;
  j["alpha"] = c.alpha;
  j["beta"] = c.beta;
  j["b"] = c.b;
  return j;
}

Json to_json(const SeparationProfile& p, const Universe& u) {
  Json j;
  j["t0"] = axiom_json(p.t0, u);
  j["t1"] = p.t1 ? axiom_json(p.t1, u) : Json{{"holds", p.t1_scope_criterion}};
  j["t2"] = axiom_json(p.t2, u);
  if (p.regular) {
    Json r;
    r["holds"] = *p.regular;
    Json list = Json::array();
    for (const auto& w : p.regular_witnesses) {
      Json e;
      e["closed"] = w.closed;
      e["point"] = u.name(w.point);
      e["first"] = w.first ? Json(*w.first) : Json(nullptr);
      e["second"] = w.second ? Json(*w.second) : Json(nullptr);
      list.push_back(e);
    }
    r[*p.regular ? "witnesses" : "violation"] = *p.regular ? list : list.front();
    j["regular"] = r;
  } else {
    j["regular"] = nullptr;
  }
  j["t1_scope_criterion"] = p.t1_scope_criterion;
  Json open = Json::array();
  for (const auto& m : p.aura_open) open.push_back(grades_json(m.grades()));
  j["aura_open"] = open;
  return j;
}

Json to_json(const ApproximationPair& pair, const Accuracy& acc) {
  Json j;
  j["lower"] = grades_json(pair.lower.grades());
  j["upper"] = grades_json(pair.upper.grades());
  j["boundary"] = grades_json(pair.boundary.grades());
  j["rho"] = acc.rho;
  j["sigma"] = acc.sigma;
  return j;
}

Json to_json(const CheckVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["detail"] = v.detail;
  j["witness"] = v.witness ? grades_json(v.witness->grades()) : Json(nullptr);
  return j;
}

Json to_json(const ScopeProfile& p) {
  Json j;
  j["trivial"] = p.trivial;
  j["crisp"] = p.crisp;
  j["symmetric"] = p.symmetric;
  j["transitive"] = p.transitive;
  return j;
}

mcdm::DecisionProblem parse_problem(const Json& json) {
  return guarded("decision problem", [&] {
    Universe alternatives = parse_universe(json.at("alternatives"));
    std::vector<mcdm::CriterionSpec> criteria;
    for (const auto& c : json.at("criteria")) {
      const std::string kind = c.value("kind", "benefit");
      if (kind != "benefit" && kind != "cost") {
        throw ValidationError("criterion kind must be 'benefit' or 'cost'");
      }
      criteria.push_back({c.at("name").get<std::string>(),
                          kind == "cost" ? mcdm::CriterionKind::cost
                                         : mcdm::CriterionKind::benefit,
                          c.at("weight").get<Grade>()});
    }
    const auto& rows = json.at("matrix");
    if (rows.size() != alternatives.size()) {
      throw ValidationError("decision matrix must have one row per alternative");
    }
    mcdm::Matrix values(alternatives.size(), criteria.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != criteria.size()) {
        throw ValidationError("decision matrix row has the wrong length");
      }
      for (std::size_t j = 0; j < criteria.size(); ++j) values(i, j) = rows[i][j].get<double>();
    }
    std::vector<mcdm::DecisionClass> classes;
    for (const auto& [name, grades] : json.at("classes").items()) {
      mcdm::DecisionClass c{name, {}};
      for (const auto& g : grades) {
        c.grades.push_back(g.is_null() ? std::nullopt : std::optional<Grade>(g.get<Grade>()));
      }
      classes.push_back(std::move(c));
    }
    std::vector<std::optional<std::string>> reference;
    if (json.contains("reference")) {
      reference.resize(alternatives.size());
      for (const auto& [alt, cls] : json.at("reference").items()) {
        reference[alternatives.index_of(alt)] = cls.get<std::string>();
      }
    }
    mcdm::DecisionProblem problem{alternatives, std::move(criteria), std::move(values),
                                  std::move(classes), std::move(reference)};
    problem.validate();
    return problem;
  });
}

Json to_json(const mcdm::DecisionProblem& p) {
  Json j;
  j["alternatives"] = universe_json(p.alternatives);
  Json criteria = Json::array();
  for (const auto& c : p.criteria) {
    Json e;
    e["name"] = c.name;
    e["kind"] = c.kind == mcdm::CriterionKind::cost ? "cost" : "benefit";
    e["weight"] = c.weight;
    criteria.push_back(e);
  }
  j["criteria"] = criteria;
  j["matrix"] = matrix_json(p.values);
  Json classes;
  for (const auto& c : p.classes) {
    Json grades = Json::array();
    for (const auto& g : c.grades) grades.push_back(g ? Json(*g) : Json(nullptr));
    classes[c.name] = grades;
  }
  j["classes"] = classes;
  if (!p.reference.empty()) {
    Json ref = Json::object();
    for (std::size_t i = 0; i < p.reference.size(); ++i) {
      if (p.reference[i]) ref[p.alternatives.name(i)] = *p.reference[i];
    }
    j["reference"] = ref;
  }
  return j;
}

mcdm::DecisionProblem load_problem_csv(const std::filesystem::path& matrix_csv,
                                       const std::filesystem::path& classes_csv,
                                       std::optional<std::vector<Grade>> weights,
                                       std::span<const std::string> cost) {
  auto matrix_rows = read_csv(matrix_csv);
  auto class_rows = read_csv(classes_csv);
  const auto& header = matrix_rows.front();
  if (header.size() < 2) throw ValidationError("matrix CSV needs at least one criterion column");

  std::vector<std::string> names;
  for (std::size_t i = 1; i < matrix_rows.size(); ++i) names.push_back(matrix_rows[i][0]);
  Universe alternatives(names);

  const std::size_t n = header.size() - 1;
  std::vector<Grade> w = weights.value_or(std::vector<Grade>(n, 1.0 / static_cast<Grade>(n)));
  if (w.size() != n) throw ValidationError("one weight per criterion is required");
  std::vector<mcdm::CriterionSpec> criteria;
  for (std::size_t j = 0; j < n; ++j) {
    bool is_cost = std::find(cost.begin(), cost.end(), header[j + 1]) != cost.end();
    criteria.push_back({header[j + 1],
                        is_cost ? mcdm::CriterionKind::cost : mcdm::CriterionKind::benefit,
                        w[j]});
  }
  for (const auto& c : cost) {
    if (std::find(header.begin() + 1, header.end(), c) == header.end()) {
      throw ValidationError("unknown cost criterion '" + c + "'");
    }
  }

  mcdm::Matrix values(names.size(), n);
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) values(i, j) = parse_number(matrix_rows[i + 1][j + 1]);
  }

  const auto& class_header = class_rows.front();
  std::vector<mcdm::DecisionClass> classes;
  for (std::size_t k = 1; k < class_header.size(); ++k) {
    classes.push_back({class_header[k],
                       std::vector<std::optional<Grade>>(names.size(), std::nullopt)});
  }
  for (std::size_t r = 1; r < class_rows.size(); ++r) {
    std::size_t i = alternatives.index_of(class_rows[r][0]);
    for (std::size_t k = 1; k < class_header.size(); ++k) {
      const auto& cell = class_rows[r][k];
      if (!cell.empty()) classes[k - 1].grades[i] = parse_number(cell);
    }
  }

  mcdm::DecisionProblem problem{alternatives, std::move(criteria), std::move(values),
                                std::move(classes), {}};
  problem.validate();
  return problem;
}

std::vector<mcdm::WeightScenario> parse_scenarios(const Json& json) {
  return guarded("scenario list", [&] {
    std::vector<mcdm::WeightScenario> out;
    for (const auto& s : json.at("scenarios")) {
      out.push_back({s.at("label").get<std::string>(), s.at("weights").get<std::vector<Grade>>()});
    }
    return out;
  });
}

Json to_json(const mcdm::RunResult& r, const mcdm::DecisionProblem& problem) {
  Json j;
  j["alpha"] = r.alpha;
  j["normalized"] = matrix_json(r.normalized);
  Json aura = Json::array();
  for (std::size_t x = 0; x < r.aura.size(); ++x) aura.push_back(grades_json(r.aura.aura(x).grades()));
  j["aura"] = aura;
  Json classes;
  for (std::size_t k = 0; k < r.approximations.size(); ++k) {
    classes[problem.classes[k].name] = to_json(r.approximations[k], accuracy(r.approximations[k]));
  }
  j["approximations"] = classes;
  j["scores"] = matrix_json(r.scores);
  Json assignments;
  for (std::size_t i = 0; i < r.assignments.size(); ++i) {
    assignments[problem.alternatives.name(i)] = assignment_json(r.assignments[i], problem);
  }
  j["classification"] = assignments;
  j["global_accuracy"] = r.global_accuracy;
  auto agreement = mcdm::reference_agreement(problem, r.assignments);
  j["reference"] = {{"correct", agreement.correct}, {"total", agreement.total}};
  return j;
}

Json to_json(const mcdm::SensitivityReport& report, const mcdm::DecisionProblem& problem) {
  Json j;
  Json scenarios = Json::array();
  for (const auto& s : report.scenarios) {
    Json e;
    e["label"] = s.label;
    e["weights"] = grades_json(s.weights);
    e["alpha"] = s.alpha;
    e["scores"] = matrix_json(s.scores);
    Json assignments;
    for (std::size_t i = 0; i < s.assignments.size(); ++i) {
      assignments[problem.alternatives.name(i)] = assignment_json(s.assignments[i], problem);
    }
    e["classification"] = assignments;
    e["reference"] = {{"correct", s.reference.correct}, {"total", s.reference.total}};
    scenarios.push_back(e);
  }
  j["scenarios"] = scenarios;
  Json unstable = Json::array();
  for (std::size_t i : report.unstable) unstable.push_back(problem.alternatives.name(i));
  j["unstable"] = unstable;
  return j;
}

}  // namespace faura::io
