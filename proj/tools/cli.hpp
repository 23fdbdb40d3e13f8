// Copyright 2026 The permchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permchan::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kResourceBound = 3,
};

/// Runs the command line \p args (args[0] is the program name) writing normal
/// output to \p out and diagnostics to \p err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permchan::cli
