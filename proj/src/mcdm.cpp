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

#include "faura/mcdm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "faura/error.hpp"

namespace faura::mcdm {
namespace {

void check_alpha(Grade alpha) {
  if (std::isnan(alpha) || alpha < 0.0 || alpha > 1.0) {
    throw ValidationError("caution parameter alpha must lie in [0, 1]");
  }
}

SensitivityReport summarize(std::vector<ScenarioOutcome> outcomes, std::size_t alternatives) {
  SensitivityReport report{std::move(outcomes), {}};
  for (std::size_t i = 0; i < alternatives; ++i) {
    for (const auto& s : report.scenarios) {
      if (s.assignments[i].decision != report.scenarios.front().assignments[i].decision) {
        report.unstable.push_back(i);
        break;
      }
    }
  }
  return report;
}

ScenarioOutcome evaluate(const DecisionProblem& problem, const Matrix& normalized,
                         std::string label, std::vector<Grade> weights, Grade alpha) {
  auto aura = build_aura_matrix(problem.alternatives, normalized, weights);
  auto pairs = approximate_classes(problem, aura);
  auto scores = score(pairs, alpha);
  auto assignments = classify(scores);
  auto agreement = reference_agreement(problem, assignments);
  return {std::move(label), std::move(weights), alpha, std::move(scores),
          std::move(assignments), agreement};
}

}  // namespace

void validate_weights(std::span<const Grade> weights) {
  double total = 0.0;
  for (Grade w : weights) {
    if (std::isnan(w) || w < 0.0) throw ValidationError("criterion weights must be non-negative");
    total += w;
  }
  if (std::abs(total - 1.0) > kEpsilon) {
    std::ostringstream os;
    os << "criterion weights sum to " << total << ", expected 1";
    throw ValidationError(os.str());
  }
}

std::vector<Grade> weights_of(const DecisionProblem& problem) {
  std::vector<Grade> w;
  w.reserve(problem.criteria.size());
  for (const auto& c : problem.criteria) w.push_back(c.weight);
  return w;
}

void DecisionProblem::validate() const {
  const std::size_t m = alternatives.size();
  if (criteria.empty()) throw ValidationError("decision problem needs at least one criterion");
  if (values.rows() != m || values.cols() != criteria.size()) {
    throw ValidationError("decision matrix must be alternatives x criteria");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (double v : values.row(i)) {
      if (!std::isfinite(v)) throw ValidationError("decision matrix holds a non-finite value");
    }
  }
  validate_weights(weights_of(*this));
  if (classes.empty()) throw ValidationError("decision problem needs at least one class");
  for (const auto& c : classes) {
    if (c.grades.size() != m) {
      throw ValidationError("class '" + c.name + "' must grade every alternative");
    }
    for (const auto& g : c.grades) {
      if (g) checked_grade(*g);
    }
  }
  if (!reference.empty()) {
    if (reference.size() != m) throw ValidationError("reference labels must cover every alternative");
    for (const auto& r : reference) {
      if (!r) continue;
      bool known = std::any_of(classes.begin(), classes.end(),
                               [&](const DecisionClass& c) { return c.name == *r; });
      if (!known) throw ValidationError("reference names unknown class '" + *r + "'");
    }
  }
}

Matrix normalize(const DecisionProblem& problem) {
  const Matrix& d = problem.values;
  Matrix f(d.rows(), d.cols());
  for (std::size_t j = 0; j < d.cols(); ++j) {
    double lo = d(0, j), hi = d(0, j);
    for (std::size_t i = 1; i < d.rows(); ++i) {
      lo = std::min(lo, d(i, j));
      hi = std::max(hi, d(i, j));
    }
    const double range = hi - lo;
    if (range <= kEpsilon) continue;
    const bool cost = problem.criteria[j].kind == CriterionKind::cost;
    for (std::size_t i = 0; i < d.rows(); ++i) {
      f(i, j) = cost ? (hi - d(i, j)) / range : (d(i, j) - lo) / range;
    }
  }
  return f;
}

ScopeFunction build_aura_matrix(const Universe& alternatives, const Matrix& normalized,
                                std::span<const Grade> weights) {
  validate_weights(weights);
  const std::size_t m = alternatives.size();
  if (normalized.rows() != m || normalized.cols() != weights.size()) {
    throw ValidationError("normalized matrix does not match alternatives and weights");
  }
  std::vector<Grade> a(m * m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      double distance = 0.0;
      for (std::size_t k = 0; k < weights.size(); ++k) {
        distance += weights[k] * std::abs(normalized(i, k) - normalized(j, k));
      }
      a[i * m + j] = a[j * m + i] = std::clamp(1.0 - distance, 0.0, 1.0);
    }
  }
  return ScopeFunction(alternatives, std::move(a));
}

FuzzySet resolved_membership(const Universe& alternatives, const DecisionClass& decision_class) {
  std::vector<Grade> grades(decision_class.grades.size());
  std::transform(decision_class.grades.begin(), decision_class.grades.end(), grades.begin(),
                 [](const std::optional<Grade>& g) { return g.value_or(0.0); });
  return FuzzySet(alternatives, std::move(grades));
}

std::vector<ApproximationPair> approximate_classes(const DecisionProblem& problem,
                                                   const ScopeFunction& aura) {
  require_same_universe(problem.alternatives, aura.universe(), "class approximation");
  std::vector<ApproximationPair> out;
  out.reserve(problem.classes.size());
  for (const auto& c : problem.classes) {
    out.push_back(approximate(aura, resolved_membership(problem.alternatives, c)));
  }
  return out;
}

Matrix score(std::span<const ApproximationPair> pairs, Grade alpha) {
  check_alpha(alpha);
  if (pairs.empty()) throw ValidationError("no decision classes to score");
  const std::size_t m = pairs.front().lower.size();
  Matrix s(m, pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      s(i, k) = alpha * pairs[k].lower[i] + (1.0 - alpha) * pairs[k].upper[i];
    }
  }
  return s;
}

std::vector<Assignment> classify(const Matrix& scores) {
  if (scores.cols() == 0) throw ValidationError("no decision classes to classify into");
  std::vector<Assignment> out(scores.rows());
  for (std::size_t i = 0; i < scores.rows(); ++i) {
    auto row = scores.row(i);
    auto& a = out[i];
    a.ranking.resize(row.size());
    std::iota(a.ranking.begin(), a.ranking.end(), std::size_t{0});
    std::stable_sort(a.ranking.begin(), a.ranking.end(),
                     [&](std::size_t l, std::size_t r) { return row[l] > row[r]; });

    std::size_t best = 0;
    for (std::size_t k = 1; k < row.size(); ++k) {
      if (row[k] > row[best] + kEpsilon) best = k;
    }
    if (grade_eq(row[best], 0.0)) continue;  // all scores vanish: undetermined
    a.decision = best;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k != best && grade_eq(row[k], row[best])) a.tie = true;
    }
  }
  return out;
}

Grade global_accuracy(std::span<const ApproximationPair> pairs) {
  if (pairs.empty()) throw ValidationError("global accuracy needs at least one class");
  Grade total = 0.0;
  for (const auto& p : pairs) total += accuracy(p).rho;
  return total / static_cast<Grade>(pairs.size());
}

RunResult run(const DecisionProblem& problem, Grade alpha) {
  problem.validate();
  check_alpha(alpha);
  auto normalized = normalize(problem);
  auto aura = build_aura_matrix(problem.alternatives, normalized, weights_of(problem));
  auto pairs = approximate_classes(problem, aura);
  auto scores = score(pairs, alpha);
  auto assignments = classify(scores);
  const Grade rho = global_accuracy(pairs);
  return {alpha, std::move(normalized), std::move(aura), std::move(pairs), std::move(scores),
          std::move(assignments), rho};
}

ReferenceAgreement reference_agreement(const DecisionProblem& problem,
                                       std::span<const Assignment> assignments) {
  ReferenceAgreement out;
  for (std::size_t i = 0; i < problem.reference.size() && i < assignments.size(); ++i) {
    if (!problem.reference[i]) continue;
    ++out.total;
    const auto& d = assignments[i].decision;
    if (d && problem.classes[*d].name == *problem.reference[i]) ++out.correct;
  }
  return out;
}

SensitivityReport weight_sensitivity(const DecisionProblem& problem,
                                     std::span<const WeightScenario> scenarios, Grade alpha) {
  problem.validate();
  check_alpha(alpha);
  for (const auto& s : scenarios) {
    if (s.weights.size() != problem.criteria.size()) {
      throw ValidationError("scenario '" + s.label + "' has the wrong number of weights");
    }
    validate_weights(s.weights);
  }
  const auto normalized = normalize(problem);
  std::vector<ScenarioOutcome> outcomes;
  for (const auto& s : scenarios) {
    outcomes.push_back(evaluate(problem, normalized, s.label, s.weights, alpha));
  }
  return summarize(std::move(outcomes), problem.alternatives.size());
}

SensitivityReport alpha_sweep(const DecisionProblem& problem, std::span<const Grade> alphas) {
  problem.validate();
  for (Grade a : alphas) check_alpha(a);
  const auto normalized = normalize(problem);
  const auto weights = weights_of(problem);
  std::vector<ScenarioOutcome> outcomes;
  for (Grade a : alphas) {
    std::ostringstream label;
    label << "alpha=" << a;
    outcomes.push_back(evaluate(problem, normalized, label.str(), weights, a));
  }
  return summarize(std::move(outcomes), problem.alternatives.size());
}

}  // namespace faura::mcdm
