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

#include "beammatch/scenario.hpp"

#include "beammatch/error.hpp"
#include "beammatch/geometry_optimizer.hpp"
#include "beammatch/units.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

namespace beammatch
{

namespace
{

Error field_error(std::string_view key, const std::string &what)
{
    return Error(ErrorCode::Scenario, "field '" + std::string(key) + "': " + what);
}

double parse_double(std::string_view key, std::string_view text)
{
    const std::string t = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(value))
        throw field_error(key, "expected a finite number, got '" + t + "'");
    return value;
}

long parse_long(std::string_view key, std::string_view text)
{
    const std::string t = trim(text);
    long value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
        throw field_error(key, "expected an integer, got '" + t + "'");
    return value;
}

} // namespace

std::string trim(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(first, last - first + 1));
}

const std::vector<std::string> &scenario_keys()
{
    static const std::vector<std::string> keys = {
        "elements",           "element-gain-dbi", "element-bw-elev-deg", "element-bw-azim-deg",
        "asd-deg",            "zsd-deg",          "eirp-dbm",            "element-power-dbm",
        "allowed-geometries",
    };
    return keys;
}

std::vector<ArrayGeometry> parse_geometry_list(std::string_view text)
{
    std::vector<ArrayGeometry> out;
    std::size_t start = 0;
    while (start <= text.size())
    {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string item = trim(text.substr(start, comma - start));
        start = comma + 1;
        if (item.empty())
            continue;
        const auto x = item.find_first_of("xX");
        if (x == std::string::npos)
            throw field_error("allowed-geometries", "expected ROWSxCOLS, got '" + item + "'");
        const long rows = parse_long("allowed-geometries", std::string_view(item).substr(0, x));
        const long cols = parse_long("allowed-geometries", std::string_view(item).substr(x + 1));
        if (rows < 1 || cols < 1)
            throw field_error("allowed-geometries", "dimensions must be >= 1 in '" + item + "'");
        out.emplace_back(rows, cols);
    }
    if (out.empty())
        throw field_error("allowed-geometries", "empty geometry list");
    return out;
}

void set_scenario_field(Scenario &s, std::string_view key, std::string_view value)
{
    if (key == "elements")
        s.n_elements = parse_long(key, value);
    else if (key == "element-gain-dbi")
        s.element_gain_dbi = parse_double(key, value);
    else if (key == "element-bw-elev-deg")
        s.element_bw_elev_deg = parse_double(key, value);
    else if (key == "element-bw-azim-deg")
        s.element_bw_azim_deg = parse_double(key, value);
    else if (key == "asd-deg")
        s.asd_deg = parse_double(key, value);
    else if (key == "zsd-deg")
        s.zsd_deg = parse_double(key, value);
    else if (key == "eirp-dbm")
        s.eirp_dbm = parse_double(key, value);
    else if (key == "element-power-dbm")
        s.per_element_power_dbm = parse_double(key, value);
    else if (key == "allowed-geometries")
        s.allowed_geometries = parse_geometry_list(value);
    else
        throw field_error(key, "unknown key");
}

void Scenario::validate() const
{
    const bool has_gain = element_gain_dbi.has_value();
    const bool has_elev = element_bw_elev_deg.has_value();
    const bool has_azim = element_bw_azim_deg.has_value();
    if (has_gain && (has_elev || has_azim))
        throw field_error("element-gain-dbi", "give either the element gain or explicit beamwidths, not both");
    if (!has_gain && !(has_elev && has_azim))
        throw field_error("element-gain-dbi",
                          "missing element description (element-gain-dbi or both element-bw-*-deg)");
    if (has_elev && !(*element_bw_elev_deg > 0.0))
        throw field_error("element-bw-elev-deg", "must be > 0");
    if (has_azim && !(*element_bw_azim_deg > 0.0))
        throw field_error("element-bw-azim-deg", "must be > 0");
    if (!asd_deg)
        throw field_error("asd-deg", "missing");
    if (!zsd_deg)
        throw field_error("zsd-deg", "missing");
    if (*asd_deg < 0.0)
        throw field_error("asd-deg", "must be >= 0");
    if (*zsd_deg < 0.0)
        throw field_error("zsd-deg", "must be >= 0");
    if (n_elements && *n_elements < 1)
        throw field_error("elements", "must be >= 1");
    if (eirp_dbm.has_value() != per_element_power_dbm.has_value())
        throw field_error(eirp_dbm ? "element-power-dbm" : "eirp-dbm",
                          "EIRP sizing needs both eirp-dbm and element-power-dbm");
}

ElementPattern Scenario::element() const
{
    validate();
    if (element_gain_dbi)
        return element_pattern_from_gain(*element_gain_dbi);
    return ElementPattern(deg_to_rad(*element_bw_elev_deg), deg_to_rad(*element_bw_azim_deg));
}

AngularSpread Scenario::spread() const
{
    validate();
    return AngularSpread::from_degrees(*zsd_deg, *asd_deg);
}

double Scenario::element_gain_dbi_value() const
{
    return element_gain_dbi ? *element_gain_dbi : linear_to_db(element().gain_linear());
}

long Scenario::element_budget() const
{
    validate();
    if (!n_elements && !eirp_dbm)
        throw field_error("elements", "missing element budget (elements or eirp-dbm)");
    if (!eirp_dbm)
        return *n_elements;
    const long cap = max_elements_for_eirp(*eirp_dbm, *per_element_power_dbm, element_gain_dbi_value());
    return n_elements ? std::min(*n_elements, cap) : cap;
}

bool Scenario::budget_capped_by_eirp() const
{
    return eirp_dbm && element_budget() != n_elements.value_or(-1);
}

Scenario parse_scenario(std::istream &in, const std::string &source_name)
{
    Scenario s;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        const auto hash = line.find('#');
        const std::string body = trim(std::string_view(line).substr(0, hash));
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        const std::string where = source_name + ":" + std::to_string(line_no) + ": ";
        if (eq == std::string::npos)
            throw Error(ErrorCode::Scenario, where + "expected 'key = value', got '" + body + "'");
        try
        {
            set_scenario_field(s, trim(std::string_view(body).substr(0, eq)),
                               std::string_view(body).substr(eq + 1));
        }
        catch (const Error &e)
        {
            throw Error(ErrorCode::Scenario, where + e.what());
        }
    }
    return s;
}

Scenario load_scenario_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open scenario file '" + path + "'");
    return parse_scenario(in, path);
}

} // namespace beammatch
