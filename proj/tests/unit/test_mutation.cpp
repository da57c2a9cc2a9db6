// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The hyperetf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Every single-entry change to a shipped ETF must break certification.

#include <gtest/gtest.h>

#include "../support/golden_frames.hpp"

namespace {

using namespace hyperetf;

constexpr int kMutations = 100;

TEST(Mutation, ShippedFramesAreCertified) {
  for (const auto& g : testsupport::golden_etfs()) EXPECT_TRUE(verify::certify_exact(g.phi, g.span).is_etf) << g.name;
}

TEST(Mutation, EverySingleEntryMutationIsKilled) {
  std::mt19937 rng(2024);
  for (const auto& g : testsupport::golden_etfs()) {
    const auto r = testsupport::run_mutations(g, kMutations, rng);
    EXPECT_EQ(r.total, kMutations);
    EXPECT_EQ(r.killed, kMutations) << g.name << " survivor at (" << r.survivor_i << ", " << r.survivor_j << ")";
  }
}

TEST(Mutation, MutantsDiffer) {
  std::mt19937 rng(7);
  for (const auto& g : testsupport::golden_etfs()) {
    const int n = std::lcm(g.phi.conductor(), 12);
    for (int t = 0; t < 50; ++t) {
      const auto& x = g.phi(static_cast<int>(rng() % g.phi.rows()), static_cast<int>(rng() % g.phi.cols()));
      EXPECT_FALSE(testsupport::mutate(x, n, rng) == x.lift(n));
    }
  }
}

}  // namespace
