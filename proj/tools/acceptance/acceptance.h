// Copyright 2026 The pgeom Authors
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

// The acceptance corpus: eleven end-to-end claims, each recomputed from
// scratch and reduced to a single pass/fail line.

#ifndef PGEOM_TOOLS_ACCEPTANCE_ACCEPTANCE_H_
#define PGEOM_TOOLS_ACCEPTANCE_ACCEPTANCE_H_

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace pgeom::acceptance {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  // Names of checks whose literal target is known not to hold; the
  // reason is carried in the check detail.
  std::vector<std::string> known_gaps;
  double seconds = 0;

  bool passed() const;
  // Every failing check is a known gap.
  bool only_known_gaps() const;
};

using Criterion = std::function<CriterionResult()>;

// Criteria 1..11 in order.
const std::vector<std::pair<int, Criterion>>& Criteria();

// Runs the selected criteria (all when empty), printing one line per
// criterion and, with verbose, one indented line per check.
std::vector<CriterionResult> Run(const std::vector<int>& ids, std::ostream& out,
                                 bool verbose);

std::string FormatLine(const CriterionResult& r);

}  // namespace pgeom::acceptance

#endif  // PGEOM_TOOLS_ACCEPTANCE_ACCEPTANCE_H_
