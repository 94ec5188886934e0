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

#ifndef LATTICE_CFT_TOOLS_CLI_HPP_
#define LATTICE_CFT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace lcft::cli {

/// args excludes the program name.  Exit codes: 0 ok, 1 verification failed,
/// 2 input error.  Reports go to --output or `out`; errors always to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcft::cli

#endif  // LATTICE_CFT_TOOLS_CLI_HPP_
