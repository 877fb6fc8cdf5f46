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

#include "beammatch/units.hpp"
#include "beammatch/error.hpp"

#include <cmath>

namespace beammatch
{

double db_to_linear(double db) noexcept
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear) noexcept
{
    return 10.0 * std::log10(linear);
}

const char *error_code_name(ErrorCode code) noexcept
{
    switch (code)
    {
    case ErrorCode::InvalidArgument:
        return "E_INVALID_ARGUMENT";
    case ErrorCode::DegenerateElement:
        return "E_DEGENERATE_ELEMENT";
    case ErrorCode::DegenerateSpread:
        return "E_DEGENERATE_SPREAD";
    case ErrorCode::EirpBelowSingleElement:
        return "E_EIRP_BELOW_SINGLE_ELEMENT";
    case ErrorCode::InvalidPair:
        return "E_INVALID_PAIR";
    case ErrorCode::IndeterminatePair:
        return "E_INDETERMINATE_PAIR";
    case ErrorCode::AsdUnidentifiable:
        return "E_ASD_UNIDENTIFIABLE";
    case ErrorCode::ZsdUnidentifiable:
        return "E_ZSD_UNIDENTIFIABLE";
    case ErrorCode::GridTooCoarse:
        return "E_GRID_TOO_COARSE";
    case ErrorCode::Scenario:
        return "E_SCENARIO";
    case ErrorCode::Measurement:
        return "E_MEASUREMENT";
    case ErrorCode::Io:
        return "E_IO";
    }
    return "E_UNKNOWN";
}

} // namespace beammatch
