/*
   Copyright 2026 The manypoints Authors

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

#ifndef MANYPOINTS_TOOLS_CLI_HPP
#define MANYPOINTS_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace manypoints::cli {

enum class Format { Default, Json, Csv, Text };

struct CliConfig {
    unsigned threads = 1;
    std::uint64_t seed = 0;
    Format format = Format::Default;
    std::uint64_t sweep_cap = std::uint64_t{1} << 16;
    std::uint64_t quartic_cap = std::uint64_t{1} << 13;
};

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace manypoints::cli

#endif  // MANYPOINTS_TOOLS_CLI_HPP
