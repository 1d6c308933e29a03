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

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "faura/mcdm.hpp"

namespace faura::repro {

/// Outcome of comparing one recomputed table against its stored expectation.
struct TableCheck {
  std::string name;
  std::string title;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  std::string worst_cell;             ///< "row/column" of the largest deviation
  std::vector<std::string> failures;  ///< cells or labels out of tolerance
  bool pass() const noexcept { return failures.empty(); }
};

struct ReproReport {
  std::vector<TableCheck> tables;
  bool pass() const noexcept;
};

/// Table names accepted by `only`, in report order.
const std::vector<std::string>& table_names();

/// Recomputes every table from `data_dir`/medical_problem.json and
/// weight_scenarios.json and compares against `data_dir`/expected/*.json.
/// `tolerance` overrides each table's stored tolerance; `only` restricts the
/// run to the named tables.
ReproReport reproduce(const std::filesystem::path& data_dir,
                      std::optional<double> tolerance = {},
                      const std::vector<std::string>& only = {});

void print_report(std::ostream& out, const ReproReport& report);

/// Aligned text table with fixed decimals.
void print_table(std::ostream& out, const std::string& title,
                 const std::vector<std::string>& rows, const std::vector<std::string>& columns,
                 const mcdm::Matrix& values, int decimals);

}  // namespace faura::repro
