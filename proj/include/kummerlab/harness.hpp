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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kummerlab/symalg.hpp"

namespace kummerlab {

using Json = nlohmann::ordered_json;

struct SuiteSpec {
    std::string name;
    AlgebraParams params;
    /// Unset: the suite's default count (exhaustive suites ignore it).
    std::optional<std::uint64_t> trials;
    std::uint64_t seed = 0;
};

enum class SuiteStatus { Passed, Failed, Skipped, Recorded };

std::string_view to_string(SuiteStatus status) noexcept;

struct SuiteReport {
    SuiteSpec spec;
    bool asserting = true;
    SuiteStatus status = SuiteStatus::Passed;
    std::string skip_reason;
    std::uint64_t trials = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    /// Degenerate draws that were resampled; never counted as passes.
    std::uint64_t discarded = 0;
    /// Suite-specific tallies, keys sorted.
    Json notes = Json::object();
    /// At most kMaxCounterexamples entries, in trial order.
    std::vector<Json> counterexamples;
    double wall_time_ms = 0.0;

    static constexpr std::size_t kMaxCounterexamples = 5;
};

/// Registry order; run_all executes the suites in this order.
std::span<const std::string_view> suite_names();

bool is_known_suite(std::string_view name);

/// Throws Error{UnknownSuite}; algebra construction errors propagate.
SuiteReport run_suite(const SuiteSpec& spec);

/// Every suite with its default trial count.
std::vector<SuiteReport> run_all(const AlgebraParams& params, std::uint64_t seed);

/// Re-runs one trial of a suite in isolation; true iff it passes.
bool replay_trial(const SuiteSpec& spec, std::uint64_t trial);

/// Reports are a pure function of the spec unless timing is included.
Json to_json(const SuiteReport& report, bool include_timing = false);

/// Element as a p x p array of residues.
Json grid_json(const Elem& e);

Json params_json(const AlgebraParams& params);

}  // namespace kummerlab
