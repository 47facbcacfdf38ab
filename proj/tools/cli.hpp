// Copyright 2026 The omegamon Authors.
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

#ifndef OMEGAMON_TOOLS_CLI_HPP_
#define OMEGAMON_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace omegamon::cli {

  // Exit codes.
  inline constexpr int exit_ok        = 0;
  inline constexpr int exit_usage     = 1;
  inline constexpr int exit_budget    = 2;
  inline constexpr int exit_invariant = 3;

  // Run the tool on `args` (without the program name).  Reports go to
  // `out`, diagnostics to `err`.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace omegamon::cli

#endif  // OMEGAMON_TOOLS_CLI_HPP_
