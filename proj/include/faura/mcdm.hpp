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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "faura/aura.hpp"
#include "faura/rough.hpp"

namespace faura::mcdm {

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_).subspan(r * cols_, cols_);
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

enum class CriterionKind { benefit, cost };

struct CriterionSpec {
  std::string name;
  CriterionKind kind = CriterionKind::benefit;
  Grade weight = 0.0;
};

/// Fuzzy decision class; unset grades are unknown memberships.
struct DecisionClass {
  std::string name;
  std::vector<std::optional<Grade>> grades;
};

struct DecisionProblem {
  Universe alternatives;
  std::vector<CriterionSpec> criteria;
  Matrix values;  ///< alternatives x criteria, raw units
  std::vector<DecisionClass> classes;
  /// Known class name per alternative, when available.
  std::vector<std::optional<std::string>> reference;

  /// Throws ValidationError on dimension mismatches, out-of-range grades,
  /// weights not summing to 1 or unknown reference classes.
  void validate() const;
};

/// Throws ValidationError unless the weights sum to 1 within eps and are
/// all non-negative.
void validate_weights(std::span<const Grade> weights);

std::vector<Grade> weights_of(const DecisionProblem& problem);

/// Column-wise min-max normalization; cost columns are reversed and
/// constant columns map to 0.
Matrix normalize(const DecisionProblem& problem);

/// a(u_i)(u_j) = 1 - sum_k w_k |f_ik - f_jk|.
ScopeFunction build_aura_matrix(const Universe& alternatives, const Matrix& normalized,
                                std::span<const Grade> weights);

/// Class membership with unknown grades read as 0.
FuzzySet resolved_membership(const Universe& alternatives, const DecisionClass& decision_class);

std::vector<ApproximationPair> approximate_classes(const DecisionProblem& problem,
                                                   const ScopeFunction& aura);

/// alternatives x classes; S = alpha * lower + (1 - alpha) * upper.
Matrix score(std::span<const ApproximationPair> pairs, Grade alpha);

struct Assignment {
  std::optional<std::size_t> decision;  ///< unset: undetermined (all-zero row)
  bool tie = false;
  std::vector<std::size_t> ranking;     ///< classes by descending score
};

/// Argmax per row; ties go to the lowest class index and are flagged.
std::vector<Assignment> classify(const Matrix& scores);

Grade global_accuracy(std::span<const ApproximationPair> pairs);

struct RunResult {
  Grade alpha = 0.5;
  Matrix normalized;
  ScopeFunction aura;
  std::vector<ApproximationPair> approximations;  ///< one per class
  Matrix scores;
  std::vector<Assignment> assignments;
  Grade global_accuracy = 0.0;
};

RunResult run(const DecisionProblem& problem, Grade alpha);

struct ReferenceAgreement {
  std::size_t correct = 0;
  std::size_t total = 0;
};

ReferenceAgreement reference_agreement(const DecisionProblem& problem,
                                       std::span<const Assignment> assignments);

struct WeightScenario {
  std::string label;
  std::vector<Grade> weights;
};

struct ScenarioOutcome {
  std::string label;
  std::vector<Grade> weights;
  Grade alpha = 0.5;
  Matrix scores;
  std::vector<Assignment> assignments;
  ReferenceAgreement reference;
};

struct SensitivityReport {
  std::vector<ScenarioOutcome> scenarios;
  /// Alternatives whose decision differs between at least two scenarios.
  std::vector<std::size_t> unstable;
};

SensitivityReport weight_sensitivity(const DecisionProblem& problem,
                                     std::span<const WeightScenario> scenarios, Grade alpha);

SensitivityReport alpha_sweep(const DecisionProblem& problem, std::span<const Grade> alphas);

}  // namespace faura::mcdm
