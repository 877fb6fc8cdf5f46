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

#include "beammatch/beam_model.hpp"

#include "beammatch/error.hpp"
#include "beammatch/geometry_optimizer.hpp"
#include "beammatch/units.hpp"

#include <cmath>
#include <string>

namespace beammatch
{

namespace
{

bool positive_finite(double x) noexcept { return std::isfinite(x) && x > 0.0; }

} // namespace

ElementPattern::ElementPattern(double bw_elev_rad, double bw_azim_rad)
    : bw_elev_(bw_elev_rad), bw_azim_(bw_azim_rad)
{
    if (!positive_finite(bw_elev_rad) || !positive_finite(bw_azim_rad))
        throw Error(ErrorCode::DegenerateElement,
                    "element beamwidths must be positive and finite");
}

ArrayGeometry::ArrayGeometry(long rows, long cols) : rows_(rows), cols_(cols)
{
    if (rows < 1 || cols < 1)
        throw Error(ErrorCode::InvalidArgument,
                    "array geometry needs rows >= 1 and cols >= 1, got " +
                        std::to_string(rows) + "x" + std::to_string(cols));
}

AngularSpread::AngularSpread(double zsd_rad, double asd_rad) : zsd_(zsd_rad), asd_(asd_rad)
{
    if (!std::isfinite(zsd_rad) || !std::isfinite(asd_rad) || zsd_rad < 0.0 || asd_rad < 0.0)
        throw Error(ErrorCode::InvalidArgument, "angular spread must be non-negative and finite");
}

AngularSpread AngularSpread::from_degrees(double zsd_deg, double asd_deg)
{
    return AngularSpread(deg_to_rad(zsd_deg), deg_to_rad(asd_deg));
}

BeamPattern::BeamPattern(double bw_elev_rad, double bw_azim_rad)
    : bw_elev_(bw_elev_rad), bw_azim_(bw_azim_rad)
{
    if (!positive_finite(bw_elev_rad) || !positive_finite(bw_azim_rad))
        throw Error(ErrorCode::InvalidArgument, "beamwidths must be positive and finite");
}

GainReport GainReport::from_linear(double nominal, double effective, double upper_bound) noexcept
{
    GainReport r;
    r.nominal_linear = nominal;
    r.effective_linear = effective;
    r.upper_bound_linear = upper_bound;
    r.nominal_dbi = linear_to_db(nominal);
    r.effective_dbi = linear_to_db(effective);
    r.upper_bound_dbi = linear_to_db(upper_bound);
    return r;
}

ElementPattern element_pattern_from_gain(double gain_dbi)
{
    if (!std::isfinite(gain_dbi))
        throw Error(ErrorCode::InvalidArgument, "element gain must be finite");
    const double bw = std::sqrt(2.0 / db_to_linear(gain_dbi));
    if (!positive_finite(bw))
        throw Error(ErrorCode::DegenerateElement,
                    "degenerate element: beamwidth of a " + std::to_string(gain_dbi) +
                        " dBi element is not representable");
    return ElementPattern(bw, bw);
}

BeamPattern nominal_beamwidths(const ElementPattern &element, const ArrayGeometry &geom)
{
    return nominal_beamwidths(element, static_cast<double>(geom.rows()),
                              static_cast<double>(geom.cols()));
}

BeamPattern nominal_beamwidths(const ElementPattern &element, double rows, double cols)
{
    return BeamPattern(element.bw_elev_rad() / rows, element.bw_azim_rad() / cols);
}

double directional_gain(const BeamPattern &pattern) noexcept
{
    return 2.0 / (pattern.bw_azim_rad() * pattern.bw_elev_rad());
}

BeamPattern effective_beamwidths(const BeamPattern &nominal, const AngularSpread &spread)
{
    return BeamPattern(std::hypot(nominal.bw_elev_rad(), spread.zsd_rad()),
                       std::hypot(nominal.bw_azim_rad(), spread.asd_rad()));
}

double effective_gain_linear(const ElementPattern &element, double rows, double cols,
                             const AngularSpread &spread)
{
    return directional_gain(effective_beamwidths(nominal_beamwidths(element, rows, cols), spread));
}

GainReport effective_gain(const ElementPattern &element, const ArrayGeometry &geom,
                          const AngularSpread &spread)
{
    const BeamPattern nominal = nominal_beamwidths(element, geom);
    const double nominal_gain = directional_gain(nominal);
    const double effective = directional_gain(effective_beamwidths(nominal, spread));
    const double bound = gain_upper_bound(geom.elements(), element, spread);
    return GainReport::from_linear(nominal_gain, effective, bound);
}

} // namespace beammatch
