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

#include "beammatch/measurement_csv.hpp"

#include "beammatch/error.hpp"
#include "beammatch/scenario.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

namespace beammatch
{

namespace
{

std::vector<std::string> split_fields(const std::string &line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true)
    {
        const std::size_t comma = line.find(',', start);
        fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return fields;
}

template <typename T>
T parse_field(const std::string &text, const std::string &where, const char *name)
{
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw Error(ErrorCode::Measurement, where + "bad " + name + " '" + text + "'");
    return value;
}

} // namespace

std::string format_fixed(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

std::vector<MeasurementRecord> parse_measurements(std::istream &in, const std::string &source_name)
{
    std::vector<MeasurementRecord> records;
    std::string line;
    long line_no = 0;
    bool seen_header = false;
    while (std::getline(in, line))
    {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty() || body.front() == '#')
            continue;
        const std::string where = source_name + ":" + std::to_string(line_no) + ": ";
        if (!seen_header)
        {
            if (body != kMeasurementHeader)
                throw Error(ErrorCode::Measurement,
                            where + "expected header '" + kMeasurementHeader + "', got '" + body + "'");
            seen_header = true;
            continue;
        }
        const std::vector<std::string> fields = split_fields(body);
        if (fields.size() != 4)
            throw Error(ErrorCode::Measurement,
                        where + "expected 4 fields, got " + std::to_string(fields.size()));
        MeasurementRecord r;
        r.rows = parse_field<long>(fields[0], where, "rows");
        r.cols = parse_field<long>(fields[1], where, "cols");
        r.tx_power_dbm = parse_field<double>(fields[2], where, "tx_power_dbm");
        r.rx_power_dbm = parse_field<double>(fields[3], where, "rx_power_dbm");
        if (r.rows < 1 || r.cols < 1)
            throw Error(ErrorCode::Measurement, where + "rows and cols must be >= 1");
        if (!std::isfinite(r.tx_power_dbm) || !std::isfinite(r.rx_power_dbm))
            throw Error(ErrorCode::Measurement, where + "powers must be finite");
        records.push_back(r);
    }
    if (!seen_header)
        throw Error(ErrorCode::Measurement, source_name + ": missing header '" + kMeasurementHeader + "'");
    return records;
}

std::vector<MeasurementRecord> load_measurements(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open measurement file '" + path + "'");
    return parse_measurements(in, path);
}

void write_measurements(std::ostream &out, const std::vector<MeasurementRecord> &records)
{
    out << kMeasurementHeader << '\n';
    for (const MeasurementRecord &r : records)
    {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%ld,%ld,%.17g,%.17g\n", r.rows, r.cols, r.tx_power_dbm, r.rx_power_dbm);
        out << buf;
    }
}

} // namespace beammatch
