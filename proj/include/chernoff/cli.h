// Copyright 2026 The Chernoff Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch command-line front end. Parsing turns argv into a CommandRequest of
// string flags; Dispatch validates them per subcommand and writes one
// document to `out`.

#ifndef CHERNOFF_CLI_H_
#define CHERNOFF_CLI_H_

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "chernoff/montecarlo.h"

namespace chernoff {

enum class OutputFormat { kText, kJson, kCsv };

enum ExitStatus : int {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitVerificationFailed = 2,
  kExitIoError = 3,
};

struct CommandRequest {
  std::string subcommand;
  // Flag name without the leading dashes -> raw value.
  std::map<std::string, std::string> parameters;
  OutputFormat format = OutputFormat::kText;
};

OutputFormat ParseOutputFormat(const std::string& name);

// 12 significant digits, "%.12g".
std::string FormatDecimal(double value);

// Throws DomainError for empty rows.
std::string RenderTable(const std::vector<ScorecardRow>& rows,
                        OutputFormat format);

int Dispatch(const CommandRequest& request, std::ostream& out,
             std::ostream& err);

// Parses argv and dispatches. Usage errors return kExitDomainError with a
// single diagnostic line on `err`.
int RunCommandLine(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err);

}  // namespace chernoff

#endif  // CHERNOFF_CLI_H_
