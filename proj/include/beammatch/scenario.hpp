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

// Scenario description shared by the CLI flags and scenario files.
//
// A scenario file is flat "key = value" text. Keys are the CLI flag names
// without the leading dashes; '#' starts a comment. Flags given on the
// command line are applied after the file and override it.
//
//     elements = 256
//     element-gain-dbi = 5
//     asd-deg = 22
//     zsd-deg = 5
//     allowed-geometries = 32x8, 16x16, 64x4

#include "beammatch/beam_model.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace beammatch
{

struct Scenario
{
    std::optional<double> element_gain_dbi;
    std::optional<double> element_bw_elev_deg;
    std::optional<double> element_bw_azim_deg;
    std::optional<long> n_elements;
    std::optional<double> asd_deg;
    std::optional<double> zsd_deg;
    std::optional<double> eirp_dbm;
    std::optional<double> per_element_power_dbm;
    std::vector<ArrayGeometry> allowed_geometries;

    /// Throws E_SCENARIO naming the offending field.
    void validate() const;

    ElementPattern element() const;
    AngularSpread spread() const;
    double element_gain_dbi_value() const;

    /// Element budget N: --elements, the EIRP cap, or the smaller of both.
    long element_budget() const;
    bool budget_capped_by_eirp() const;
};

/// Known keys, in the order they are documented.
const std::vector<std::string> &scenario_keys();

/// Sets one field from text. Throws E_SCENARIO for unknown keys or bad values.
void set_scenario_field(Scenario &scenario, std::string_view key, std::string_view value);

/// Parses a scenario file. Errors carry "<source>:<line>: field '<key>'".
Scenario parse_scenario(std::istream &in, const std::string &source_name);
Scenario load_scenario_file(const std::string &path);

/// "32x8,16x16" -> geometries. Throws E_SCENARIO.
std::vector<ArrayGeometry> parse_geometry_list(std::string_view text);

std::string trim(std::string_view text);

} // namespace beammatch
