// SPDX-License-Identifier: Apache-2.0
//
// beammatch: effective beamforming gain and array geometry matching
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

#pragma once

// The four CLI subcommands as library calls. Each writes its report to `out`
// and throws beammatch::Error on user error.

#include "beammatch/channel_oracle.hpp"
#include "beammatch/scenario.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace beammatch
{

struct SweepRow
{
    ArrayGeometry geometry;
    double effective_gain_dbi = 0.0;
    bool optimal = false;
};

inline constexpr const char *kSweepHeader = "rows,cols,effective_gain_dbi,optimal";

/// Text report; with `csv_out`, also a one-row CSV summary of the integer optimum.
void cmd_optimize(const Scenario &scenario, std::ostream &out, std::ostream *csv_out = nullptr);

/// Rows for the given geometries, or for the full scan set when empty. The
/// integer optimum is appended when the list does not contain it.
std::vector<SweepRow> sweep_rows(const Scenario &scenario, const std::vector<ArrayGeometry> &geometries);
void cmd_sweep(const Scenario &scenario, const std::vector<ArrayGeometry> &geometries, std::ostream &csv_out);

struct EstimateOptions
{
    std::string measurements_path;
    std::size_t baseline_index = 0;
    std::optional<ElementPattern> element;
    std::optional<ArrayGeometry> predict;
};

void cmd_estimate(const EstimateOptions &options, std::ostream &out);

struct ValidateOptions
{
    /// Geometry to check; the integer optimum of the scenario when absent.
    std::optional<ArrayGeometry> geometry;
    McConfig mc;
};

inline constexpr double kOracleToleranceDb = 0.2;
inline constexpr double kMonteCarloSigmas = 3.0;

/// Returns true when both oracles agree with the analytic gain.
bool cmd_validate(const Scenario &scenario, const ValidateOptions &options, std::ostream &out);

} // namespace beammatch
