// Copyright 2026 The kummerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kummerlab/harness.hpp"
#include "kummerlab/symalg.hpp"

namespace kummerlab::cli {

enum class Verb { Check, Decompose, Label, Chain, Suite, All };
enum class Format { Json, Text };

struct Command {
    Verb verb = Verb::All;
    AlgebraParams params;
    std::string x;
    std::string z;
    std::string suite;
    std::optional<std::uint64_t> trials;
    std::uint64_t seed = 0;
    Format format = Format::Json;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Executes a validated command and writes one report to `out`; returns the exit code.
int execute(const Command& cmd, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name), then executes. Usage and parse errors go to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace kummerlab::cli
