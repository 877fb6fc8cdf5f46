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

// Sub-array power measurement CSV.
//
//     # comment lines start with '#'
//     rows,cols,tx_power_dbm,rx_power_dbm
//     16,16,24.0,-31.5
//     16,2,15.0,-42.7

#include "beammatch/spread_estimator.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace beammatch
{

inline constexpr const char *kMeasurementHeader = "rows,cols,tx_power_dbm,rx_power_dbm";

/// Throws E_MEASUREMENT with "<source>:<line>:" on malformed input.
std::vector<MeasurementRecord> parse_measurements(std::istream &in, const std::string &source_name);
std::vector<MeasurementRecord> load_measurements(const std::string &path);

/// Writes powers at round-trip precision.
void write_measurements(std::ostream &out, const std::vector<MeasurementRecord> &records);

/// Fixed six-decimal rendering used by every CSV and report.
std::string format_fixed(double value);

} // namespace beammatch
