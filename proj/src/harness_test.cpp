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

#include "kummerlab/harness.hpp"

#include <gtest/gtest.h>

#include "kummerlab/error.hpp"

namespace kummerlab {
namespace {

const AlgebraParams kDefault{};
const AlgebraParams kSmall{3, 7, 2, 3, std::nullopt};

TEST(Harness, Registry) {
    const auto names = suite_names();
    ASSERT_EQ(names.size(), 18U);
    EXPECT_EQ(names.front(), "decomposition_roundtrip");
    EXPECT_EQ(names.back(), "p3_closed_form");
    EXPECT_TRUE(is_known_suite("remark_family_exact"));
    EXPECT_FALSE(is_known_suite("nope"));
    try {
        run_suite(SuiteSpec{"nope", kDefault, std::nullopt, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownSuite);
    }
}

TEST(Harness, SkipsByDegree) {
    const SuiteReport r = run_suite(SuiteSpec{"inner2_chain", kSmall, std::nullopt, 0});
    EXPECT_EQ(r.status, SuiteStatus::Skipped);
    EXPECT_EQ(r.trials, 0U);
    EXPECT_EQ(to_json(r)["status"], "skipped");
    EXPECT_EQ(run_suite(SuiteSpec{"example_p3", kDefault, std::nullopt, 0}).status, SuiteStatus::Skipped);
}

TEST(Harness, SmallExamplePasses) {
    const SuiteReport r = run_suite(SuiteSpec{"example_p3", kSmall, std::nullopt, 0});
    EXPECT_EQ(r.status, SuiteStatus::Passed);
    EXPECT_EQ(r.failed, 0U);
    EXPECT_EQ(r.passed, r.trials);
}

TEST(Harness, LemmaIsExhaustive) {
    const SuiteReport r = run_suite(SuiteSpec{"lemma3", kDefault, 3, 0});
    EXPECT_EQ(r.trials, 2982U);
    EXPECT_EQ(r.failed, 0U);
    EXPECT_EQ(r.notes["p3"], 6);
}

TEST(Harness, DeterministicReports) {
    for (const char* name : {"twotwo_chain", "prop2in2", "annihilation"}) {
        const SuiteSpec spec{name, kDefault, 40, 7};
        EXPECT_EQ(to_json(run_suite(spec)).dump(), to_json(run_suite(spec)).dump()) << name;
    }
    const SuiteSpec a{"weight22", kDefault, 30, 1};
    const SuiteSpec b{"weight22", kDefault, 30, 2};
    EXPECT_NE(to_json(run_suite(a)).dump(), to_json(run_suite(b)).dump());
}

TEST(Harness, TimingOnlyOnRequest) {
    const SuiteReport r = run_suite(SuiteSpec{"nozero", kDefault, 5, 0});
    EXPECT_FALSE(to_json(r).contains("wall_time_ms"));
    EXPECT_TRUE(to_json(r, true).contains("wall_time_ms"));
}

TEST(Harness, CountsAddUp) {
    for (const char* name : {"remark_family", "remark_family_exact", "split2cent"}) {
        const SuiteReport r = run_suite(SuiteSpec{name, kDefault, 100, 3});
        // Degenerate family members are discarded instead of passed or failed.
        EXPECT_LE(r.passed + r.failed, r.trials) << name;
        EXPECT_LE(r.counterexamples.size(), SuiteReport::kMaxCounterexamples);
    }
}

TEST(Harness, CounterexamplesReplay) {
    const SuiteSpec spec{"remark_family", kDefault, 200, 0};
    const SuiteReport r = run_suite(spec);
    ASSERT_GT(r.failed, 0U);
    ASSERT_FALSE(r.counterexamples.empty());
    for (const auto& ce : r.counterexamples) {
        EXPECT_FALSE(replay_trial(spec, ce["trial"].get<std::uint64_t>()));
        EXPECT_TRUE(ce.contains("reason"));
    }
    EXPECT_TRUE(replay_trial(SuiteSpec{"annihilation", kDefault, 10, 0}, 3));
}

TEST(Harness, ClosedFormIsRecordedNotAsserted) {
    const SuiteReport r = run_suite(SuiteSpec{"p3_closed_form", kSmall, std::nullopt, 0});
    EXPECT_FALSE(r.asserting);
    EXPECT_EQ(r.status, SuiteStatus::Recorded);
    EXPECT_TRUE(r.notes.contains("displayed_sum_equals_x"));
    EXPECT_EQ(r.notes["derived_sum_equals_x"], 1);
}

}  // namespace
}  // namespace kummerlab
