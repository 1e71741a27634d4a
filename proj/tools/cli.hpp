// Copyright 2026 The loopnet Authors
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

#include <ostream>
#include <string>
#include <vector>

namespace loopnet::cli {

enum ExitCode : int {
  kOk = 0,
  kParameterError = 1,
  kTheoremViolation = 2,
  kFindings = 3,
  kIoError = 4,
};

/// Runs the tool with args (program name excluded). Normal output goes to
/// out, warnings and errors to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// "5..30" or "17". Throws loopnet::InvalidParameter.
std::pair<int, int> parse_range(const std::string& text);

/// "1,2,5,8". Throws loopnet::InvalidParameter on non-integers.
std::vector<int> parse_list(const std::string& text);

}  // namespace loopnet::cli
