// Copyright 2026 The Authors.
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

#ifndef DIVCOM_TOOLS_CLI_H_
#define DIVCOM_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>

namespace divcom::tools {

// Entry point of the `divcom` executable. Returns the process exit code;
// errors are reported on `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

// Seed of the i-th generated election, shared by `generate` and synthetic
// experiment datasets so both see the same elections.
std::uint64_t SyntheticSeed(std::uint64_t base_seed, int index);

}  // namespace divcom::tools

#endif  // DIVCOM_TOOLS_CLI_H_
