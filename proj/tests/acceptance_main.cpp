// Copyright 2026 The lattice-cft Authors
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

// Runs the acceptance suite with the default seed and prints one line per
// criterion.  Exit status is nonzero if any criterion fails.

#include <cstdio>
#include <iostream>

#include "lattice_cft/acceptance.hpp"

int main() {
  const auto report = lcft::run_acceptance({});
  for (const auto& c : report.criteria) {
    std::printf("criterion %2d %-22s %s\n", c.id, c.name.c_str(), c.passed ? "PASS" : "FAIL");
    if (!c.passed) std::cout << "  " << c.detail.dump() << "\n";
  }
  std::printf("%s\n", report.all_passed() ? "ALL PASS" : "SOME CRITERIA FAILED");
  return report.all_passed() ? 0 : 1;
}
