// Copyright 2026 The Epicorpus Authors.
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

#ifndef EPICORPUS_TOOLS_CLI_CLI_H_
#define EPICORPUS_TOOLS_CLI_CLI_H_

#include <iosfwd>

namespace epicorpus {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // errors and validation failures
inline constexpr int kExitUsage = 2;    // bad flags or arguments

// Runs the command line. Results go to `out`; failures are reported on
// `err` as one line "error: <class>: <message>", where <class> is an error
// kind name such as parse_error or usage_error.
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace epicorpus

#endif  // EPICORPUS_TOOLS_CLI_CLI_H_
