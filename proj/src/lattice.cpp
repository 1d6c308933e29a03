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

#include "faura/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "faura/error.hpp"

namespace faura {

Grade checked_grade(Grade g) {
  if (std::isnan(g) || g < -kEpsilon || g > 1.0 + kEpsilon) {
    throw ValidationError("grade " + std::to_string(g) + " outside [0, 1]");
  }
  return std::clamp(g, 0.0, 1.0);
}

Universe::Universe(std::vector<std::string> points) {
  if (points.empty()) throw ValidationError("universe must be non-empty");
  auto data = std::make_shared<Data>();
  data->points = std::move(points);
  for (std::size_t i = 0; i < data->points.size(); ++i) {
    if (!data->index.emplace(data->points[i], i).second) {
      throw ValidationError("duplicate point '" + data->points[i] + "' in universe");
    }
  }
  data_ = std::move(data);
}

std::optional<std::size_t> Universe::find(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw ValidationError("unknown point '" + std::string(name) + "'");
}

bool operator==(const Universe& a, const Universe& b) {
  return a.data_ == b.data_ || a.data_->points == b.data_->points;
}

void require_same_universe(const Universe& a, const Universe& b, std::string_view context) {
  if (!(a == b)) {
    throw UniverseMismatch(std::string(context) + ": operands live on different universes");
  }
}

FuzzySet::FuzzySet(Universe universe, std::vector<Grade> grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
  if (grades_.size() != universe_.size()) {
    throw ValidationError("fuzzy set has " + std::to_string(grades_.size()) +
                          " grades for a universe of " + std::to_string(universe_.size()) +
                          " points");
  }
  for (Grade& g : grades_) g = checked_grade(g);
}

FuzzySet FuzzySet::constant(const Universe& universe, Grade alpha) {
  return FuzzySet(universe, std::vector<Grade>(universe.size(), alpha));
}

FuzzySet FuzzySet::characteristic(const Universe& universe, const PointSet& subset) {
  std::vector<Grade> grades(universe.size(), 0.0);
  for (std::size_t i : subset) {
    if (i >= universe.size()) throw ValidationError("point index out of range");
    grades[i] = 1.0;
  }
  return FuzzySet(Unchecked{}, universe, std::move(grades));
}

FuzzySet FuzzySet::characteristic(const Universe& universe,
                                  std::span<const std::string> subset) {
  PointSet indices;
  indices.reserve(subset.size());
  for (const auto& name : subset) indices.push_back(universe.index_of(name));
  return characteristic(universe, indices);
}

bool FuzzySet::approx_equal(const FuzzySet& other) const {
  require_same_universe(universe_, other.universe_, "equality");
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (!grade_eq(grades_[i], other.grades_[i])) return false;
  }
  return true;
}

bool operator==(const FuzzySet& a, const FuzzySet& b) {
  return a.universe_ == b.universe_ && a.grades_ == b.grades_;
}

FuzzySet meet(const FuzzySet& mu, const FuzzySet& nu) {
  require_same_universe(mu.universe_, nu.universe_, "meet");
  std::vector<Grade> out(mu.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(mu.grades_[i], nu.grades_[i]);
  return FuzzySet(FuzzySet::Unchecked{}, mu.universe_, std::move(out));
}

FuzzySet join(const FuzzySet& mu, const FuzzySet& nu) {
  require_same_universe(mu.universe_, nu.universe_, "join");
  std::vector<Grade> out(mu.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(mu.grades_[i], nu.grades_[i]);
  return FuzzySet(FuzzySet::Unchecked{}, mu.universe_, std::move(out));
}

FuzzySet complement(const FuzzySet& mu) {
  std::vector<Grade> out(mu.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 1.0 - mu.grades_[i];
  return FuzzySet(FuzzySet::Unchecked{}, mu.universe_, std::move(out));
}

bool leq(const FuzzySet& mu, const FuzzySet& nu) {
  require_same_universe(mu.universe(), nu.universe(), "leq");
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (!grade_le(mu[i], nu[i])) return false;
  }
  return true;
}

PointSet alpha_cut(const FuzzySet& mu, Grade alpha, CutKind kind) {
  PointSet out;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    bool in = kind == CutKind::weak ? mu[i] >= alpha - kEpsilon : mu[i] > alpha + kEpsilon;
    if (in) out.push_back(i);
  }
  return out;
}

Grade sum(const FuzzySet& mu) {
  return std::accumulate(mu.grades().begin(), mu.grades().end(), 0.0);
}

Grade supremum(const FuzzySet& mu) {
  return *std::max_element(mu.grades().begin(), mu.grades().end());
}

Grade infimum(const FuzzySet& mu) {
  return *std::min_element(mu.grades().begin(), mu.grades().end());
}

std::ostream& operator<<(std::ostream& os, const FuzzySet& mu) {
  os << '(';
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) os << ", ";
    os << mu[i];
  }
  return os << ')';
}

}  // namespace faura
