// Copyright 2026 The nilsem Authors
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

#ifndef NILSEM_CLI_HPP_
#define NILSEM_CLI_HPP_

#include <string>
#include <vector>

namespace nilsem::cli {

  // Exit codes are part of the scripting interface.
  enum ExitCode : int {
    success             = 0,
    property_negative   = 1,  // e.g. the input is not closed / not nilpotent
    usage_error         = 2,  // bad flags, unreadable or malformed files
    invariant_violation = 3,  // internal self-check failed
  };

  struct CommandOutcome {
    int                      exit_code = success;
    std::string              out;
    std::string              err;
    std::vector<std::string> files_written;
  };

  // args excludes the program name, e.g. {"xi", "6"}.
  CommandOutcome run(std::vector<std::string> const& args);

}  // namespace nilsem::cli

#endif  // NILSEM_CLI_HPP_
