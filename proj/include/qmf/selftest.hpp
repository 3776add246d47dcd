// Copyright 2026 the qmf authors
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

#ifndef QMF_SELFTEST_HPP
#define QMF_SELFTEST_HPP

#include <string>
#include <vector>

namespace qmf {

struct CheckResult {
  int number = 0;
  std::string id;
  bool pass = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // 0 = unbounded
  std::string detail;          // first failure, empty when green
};

/// Runs the acceptance checks whose id contains `filter` (all when empty).
/// Every check is deterministic; randomized ones use a fixed seed.
std::vector<CheckResult> run_selftest(const std::string& filter);

std::string format_selftest_report(const std::vector<CheckResult>& results);

bool selftest_all_passed(const std::vector<CheckResult>& results);

}  // namespace qmf

#endif
