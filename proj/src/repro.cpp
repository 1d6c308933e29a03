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

#include "faura/repro.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "faura/error.hpp"
#include "faura/io.hpp"

namespace faura::repro {
namespace {

using io::Json;

std::string decision_name(const mcdm::Assignment& a, const mcdm::DecisionProblem& p) {
  return a.decision ? p.classes[*a.decision].name : "Undetermined";
}

std::string fixed(double v, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << v;
  return os.str();
}

TableCheck start(const std::string& name, const Json& expected, std::optional<double> tolerance) {
  TableCheck check;
  check.name = name;
  check.title = expected.value("title", name);
  check.tolerance = tolerance.value_or(expected.value("tolerance", 0.0));
  return check;
}

// Compares `actual` cell by cell with the expected "values" grid.
void compare_grid(TableCheck& check, const Json& expected, const std::vector<std::string>& rows,
                  const std::vector<std::string>& columns, const mcdm::Matrix& actual) {
  const auto& values = expected.at("values");
  if (values.size() != actual.rows()) throw ValidationError(check.name + ": row count differs");
  const int decimals = expected.value("decimals", 3);
  for (std::size_t i = 0; i < actual.rows(); ++i) {
    if (values[i].size() != actual.cols()) {
      throw ValidationError(check.name + ": column count differs");
    }
    for (std::size_t j = 0; j < actual.cols(); ++j) {
      const double want = values[i][j].get<double>();
      const double dev = std::abs(actual(i, j) - want);
      const std::string cell = rows[i] + "/" + columns[j];
      if (check.worst_cell.empty() || dev > check.max_deviation) {
        check.max_deviation = dev;
        check.worst_cell = cell;
      }
      if (dev > check.tolerance) {
        check.failures.push_back(cell + ": got " + fixed(actual(i, j), decimals + 3) +
                                 ", expected " + fixed(want, decimals));
      }
    }
  }
}

void compare_label(TableCheck& check, const std::string& where, const std::string& got,
                   const std::string& want) {
  if (got != want) check.failures.push_back(where + ": got " + got + ", expected " + want);
}

void compare_agreement(TableCheck& check, const std::string& where,
                       const mcdm::ReferenceAgreement& got, const Json& expected) {
  if (!expected.contains("reference_correct")) return;
  const auto correct = expected.at("reference_correct").get<std::size_t>();
  const auto total = expected.at("reference_total").get<std::size_t>();
  if (got.correct != correct || got.total != total) {
    check.failures.push_back(where + "reference agreement " + std::to_string(got.correct) + "/" +
                             std::to_string(got.total) + ", expected " + std::to_string(correct) +
                             "/" + std::to_string(total));
  }
}

mcdm::Matrix pair_matrix(const std::vector<ApproximationPair>& pairs, bool upper) {
  const std::size_t m = pairs.front().lower.size();
  mcdm::Matrix out(m, pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const FuzzySet& s = upper ? pairs[k].upper : pairs[k].lower;
    for (std::size_t i = 0; i < m; ++i) out(i, k) = s[i];
  }
  return out;
}

mcdm::Matrix scope_matrix(const ScopeFunction& a) {
  mcdm::Matrix out(a.size(), a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) out(x, y) = a(x, y);
  }
  return out;
}

}  // namespace

bool ReproReport::pass() const noexcept {
  return std::all_of(tables.begin(), tables.end(), [](const TableCheck& t) { return t.pass(); });
}

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names = {"aura_matrix", "upper_approximation",
                                                 "lower_approximation", "scores",
                                                 "weight_sensitivity", "alpha_sweep"};
  return names;
}

ReproReport reproduce(const std::filesystem::path& data_dir, std::optional<double> tolerance,
                      const std::vector<std::string>& only) {
  for (const auto& name : only) {
    const auto& names = table_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw ValidationError("unknown table '" + name + "'");
    }
  }
  auto wanted = [&](const std::string& name) {
    return only.empty() || std::find(only.begin(), only.end(), name) != only.end();
  };
  auto expected = [&](const std::string& name) {
    return io::read_json_file(data_dir / "expected" / (name + ".json"));
  };

  const auto problem = io::parse_problem(io::read_json_file(data_dir / "medical_problem.json"));
  const std::vector<std::string> alts(problem.alternatives.points().begin(),
                                      problem.alternatives.points().end());
  std::vector<std::string> classes;
  for (const auto& c : problem.classes) classes.push_back(c.name);

  ReproReport report;
  try {
    if (wanted("aura_matrix")) {
      auto e = expected("aura_matrix");
      auto base = mcdm::run(problem, 0.5);
      auto check = start("aura_matrix", e, tolerance);
      compare_grid(check, e, alts, alts, scope_matrix(base.aura));
      report.tables.push_back(std::move(check));
    }
    for (bool upper : {true, false}) {
      const std::string name = upper ? "upper_approximation" : "lower_approximation";
      if (!wanted(name)) continue;
      auto e = expected(name);
      auto base = mcdm::run(problem, 0.5);
      auto check = start(name, e, tolerance);
      compare_grid(check, e, alts, classes, pair_matrix(base.approximations, upper));
      report.tables.push_back(std::move(check));
    }
    if (wanted("scores")) {
      auto e = expected("scores");
      auto result = mcdm::run(problem, e.value("alpha", 0.5));
      auto check = start("scores", e, tolerance);
      compare_grid(check, e, alts, classes, result.scores);
      for (const auto& [alt, cls] : e.at("classification").items()) {
        const auto i = problem.alternatives.index_of(alt);
        compare_label(check, alt, decision_name(result.assignments[i], problem),
                      cls.get<std::string>());
      }
      compare_agreement(check, "", mcdm::reference_agreement(problem, result.assignments), e);
      report.tables.push_back(std::move(check));
    }
    if (wanted("weight_sensitivity")) {
      auto e = expected("weight_sensitivity");
      auto scenarios = io::parse_scenarios(io::read_json_file(data_dir / "weight_scenarios.json"));
      auto sens = mcdm::weight_sensitivity(problem, scenarios, e.value("alpha", 0.5));
      auto check = start("weight_sensitivity", e, tolerance);
      const auto& rows = e.at("scenarios");
      if (rows.size() != sens.scenarios.size()) {
        throw ValidationError("weight_sensitivity: scenario count differs");
      }
      for (std::size_t s = 0; s < rows.size(); ++s) {
        const auto& outcome = sens.scenarios[s];
        compare_label(check, "scenario label", outcome.label, rows[s].at("label").get<std::string>());
        for (const auto& [alt, cls] : rows[s].at("classification").items()) {
          const auto i = problem.alternatives.index_of(alt);
          compare_label(check, outcome.label + " " + alt,
                        decision_name(outcome.assignments[i], problem), cls.get<std::string>());
        }
        compare_agreement(check, outcome.label + " ", outcome.reference, rows[s]);
      }
      report.tables.push_back(std::move(check));
    }
    if (wanted("alpha_sweep")) {
      auto e = expected("alpha_sweep");
      auto alphas = e.at("alphas").get<std::vector<double>>();
      auto sweep = mcdm::alpha_sweep(problem, alphas);
      const auto i = problem.alternatives.index_of(e.at("alternative").get<std::string>());
      mcdm::Matrix rows(alphas.size(), classes.size());
      std::vector<std::string> labels;
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        for (std::size_t k = 0; k < classes.size(); ++k) {
          rows(a, k) = sweep.scenarios[a].scores(i, k);
        }
        labels.push_back(sweep.scenarios[a].label);
      }
      auto check = start("alpha_sweep", e, tolerance);
      compare_grid(check, e, labels, classes, rows);
      const auto& want = e.at("classification");
      for (std::size_t a = 0; a < alphas.size() && a < want.size(); ++a) {
        compare_label(check, labels[a], decision_name(sweep.scenarios[a].assignments[i], problem),
                      want[a].get<std::string>());
      }
      report.tables.push_back(std::move(check));
    }
  } catch (const Json::exception& ex) {
    throw ValidationError(std::string("malformed expectation file: ") + ex.what());
  }
  return report;
}

void print_report(std::ostream& out, const ReproReport& report) {
  for (const auto& t : report.tables) {
    out << (t.pass() ? "PASS " : "FAIL ") << t.name << " (" << t.title << ")";
    if (!t.worst_cell.empty()) {
      out << "  max deviation " << std::setprecision(3) << std::scientific << t.max_deviation
          << std::defaultfloat << " at " << t.worst_cell << ", tolerance " << t.tolerance;
    }
    out << '\n';
    for (const auto& f : t.failures) out << "    " << f << '\n';
  }
  out << (report.pass() ? "all tables reproduced" : "reproduction failed") << '\n';
}

void print_table(std::ostream& out, const std::string& title,
                 const std::vector<std::string>& rows, const std::vector<std::string>& columns,
                 const mcdm::Matrix& values, int decimals) {
  std::size_t label_width = 0;
  for (const auto& r : rows) label_width = std::max(label_width, r.size());
  std::vector<std::size_t> widths;
  for (const auto& c : columns) {
    widths.push_back(std::max<std::size_t>(c.size(), static_cast<std::size_t>(decimals) + 2));
  }
  out << title << '\n' << std::string(label_width, ' ');
  for (std::size_t j = 0; j < columns.size(); ++j) out << "  " << std::setw(static_cast<int>(widths[j])) << columns[j];
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << std::left << std::setw(static_cast<int>(label_width)) << rows[i] << std::right;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      out << "  " << std::setw(static_cast<int>(widths[j])) << fixed(values(i, j), decimals);
    }
    out << '\n';
  }
}

}  // namespace faura::repro
