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

#include <optional>
#include <string>

#include "faura/lattice.hpp"

namespace faura {

/// Outcome of a theorem-style consistency check.
struct CheckVerdict {
  enum class Status { consistent, violated, inapplicable };

  Status status = Status::consistent;
  std::string detail;
  std::optional<FuzzySet> witness;

  bool ok() const noexcept { return status != Status::violated; }

  static CheckVerdict consistent() { return {}; }
  static CheckVerdict inapplicable(std::string why) {
    return {Status::inapplicable, std::move(why), std::nullopt};
  }
  static CheckVerdict violated(std::string why, std::optional<FuzzySet> witness = std::nullopt) {
    return {Status::violated, std::move(why), std::move(witness)};
  }
};

const char* to_string(CheckVerdict::Status status);

}  // namespace faura
