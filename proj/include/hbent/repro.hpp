// Copyright 2026 The hbent Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file
 * Fixed manifest of published numbers and the routine that recomputes them.
 */

#include <string>
#include <vector>

namespace hbent::repro {

inline constexpr double kClaimTolerance = 1e-4;

struct ClaimRow {
    std::string id;
    std::string description;
    double paper_value = 0.0;
    double computed_value = 0.0;
    double abs_diff = 0.0;
    bool pass = false;
};

struct ReproReport {
    std::vector<ClaimRow> rows;

    [[nodiscard]] bool all_pass() const;
};

/// Ids in manifest order. Every id appears exactly once in a report.
const std::vector<std::string> &claim_ids();

/// Evaluates every claim; failures become rows, never exceptions.
ReproReport reproduce_paper();

} // namespace hbent::repro
