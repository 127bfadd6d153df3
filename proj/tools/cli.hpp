/*
Copyright 2026 The bdmbt Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bdmbt::cli {

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,  // invalid schedule, b > k, unsatisfying assignment
    kMalformed = 2, // bad flags, unreadable or unparsable input
    kBudgetExceeded = 3,
};

/// Runs one command line (args[0] is the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bdmbt::cli
