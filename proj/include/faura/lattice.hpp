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
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace faura {

/// Membership grade in [0, 1].
using Grade = double;

/// Absolute tolerance for every grade comparison.
inline constexpr Grade kEpsilon = 1e-9;

inline bool grade_eq(Grade a, Grade b) noexcept {
  return (a > b ? a - b : b - a) <= kEpsilon;
}
inline bool grade_le(Grade a, Grade b) noexcept { return a <= b + kEpsilon; }

/// Throws ValidationError unless g lies in [-eps, 1+eps]; clamps into [0, 1].
Grade checked_grade(Grade g);

/// Ordered, non-empty list of distinct point names. Copies share storage, so
/// passing a Universe by value is cheap. The point order defines the index
/// of every grade vector built over it.
class Universe {
 public:
  explicit Universe(std::vector<std::string> points);

  std::size_t size() const noexcept { return data_->points.size(); }
  std::span<const std::string> points() const noexcept { return data_->points; }
  const std::string& name(std::size_t index) const { return data_->points.at(index); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws ValidationError for an unknown name.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Universe& a, const Universe& b);

 private:
  struct Data {
    std::vector<std::string> points;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Throws UniverseMismatch naming `context` when the universes differ.
void require_same_universe(const Universe& a, const Universe& b, std::string_view context);

/// Sorted point indices of a crisp subset.
using PointSet = std::vector<std::size_t>;

enum class CutKind { weak, strict };

class FuzzySet {
 public:
  /// Validates the length and the grade range; grades within eps outside
  /// [0, 1] are clamped.
  FuzzySet(Universe universe, std::vector<Grade> grades);

  static FuzzySet constant(const Universe& universe, Grade alpha);
  static FuzzySet empty(const Universe& universe) { return constant(universe, 0.0); }
  static FuzzySet full(const Universe& universe) { return constant(universe, 1.0); }
  static FuzzySet characteristic(const Universe& universe, const PointSet& subset);
  static FuzzySet characteristic(const Universe& universe,
                                 std::span<const std::string> subset);
  static FuzzySet point(const Universe& universe, std::size_t index) {
    return characteristic(universe, PointSet{index});
  }

  const Universe& universe() const noexcept { return universe_; }
  std::span<const Grade> grades() const noexcept { return grades_; }
  std::size_t size() const noexcept { return grades_.size(); }
  Grade operator[](std::size_t index) const { return grades_[index]; }
  Grade at(std::string_view point) const { return grades_[universe_.index_of(point)]; }

  /// Pointwise equality within eps.
  bool approx_equal(const FuzzySet& other) const;

  /// Exact (bitwise) equality of grades and universes.
  friend bool operator==(const FuzzySet& a, const FuzzySet& b);

 private:
  struct Unchecked {};
  FuzzySet(Unchecked, Universe universe, std::vector<Grade> grades)
      : universe_(std::move(universe)), grades_(std::move(grades)) {}

  friend FuzzySet meet(const FuzzySet&, const FuzzySet&);
  friend FuzzySet join(const FuzzySet&, const FuzzySet&);
  friend FuzzySet complement(const FuzzySet&);

  Universe universe_;
  std::vector<Grade> grades_;
};

FuzzySet meet(const FuzzySet& mu, const FuzzySet& nu);
FuzzySet join(const FuzzySet& mu, const FuzzySet& nu);
FuzzySet complement(const FuzzySet& mu);

/// mu <= nu pointwise, within eps.
bool leq(const FuzzySet& mu, const FuzzySet& nu);

/// {x : mu(x) >= alpha} for weak cuts, {x : mu(x) > alpha} for strict ones.
PointSet alpha_cut(const FuzzySet& mu, Grade alpha, CutKind kind = CutKind::weak);

Grade sum(const FuzzySet& mu);
Grade supremum(const FuzzySet& mu);
Grade infimum(const FuzzySet& mu);

std::ostream& operator<<(std::ostream& os, const FuzzySet& mu);

}  // namespace faura
