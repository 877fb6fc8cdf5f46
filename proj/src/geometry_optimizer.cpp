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

#include "beammatch/geometry_optimizer.hpp"

#include "beammatch/error.hpp"
#include "beammatch/units.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace beammatch
{

namespace
{

constexpr double kTieTolerance = 1e-12;

void check_budget(long n_elements)
{
    if (n_elements < 1)
        throw Error(ErrorCode::InvalidArgument,
                    "element budget must be >= 1, got " + std::to_string(n_elements));
}

} // namespace

double gain_upper_bound(long n_elements, const ElementPattern &element, const AngularSpread &spread)
{
    check_budget(n_elements);
    const double element_area = element.bw_elev_rad() * element.bw_azim_rad();
    return 2.0 / (spread.asd_rad() * spread.zsd_rad() + element_area / static_cast<double>(n_elements));
}

ContinuousGeometry optimal_geometry_continuous(long n_elements, const ElementPattern &element,
                                               const AngularSpread &spread)
{
    check_budget(n_elements);
    if (spread.zsd_rad() == 0.0 || spread.asd_rad() == 0.0)
        throw Error(ErrorCode::DegenerateSpread,
                    "degenerate spread: closed-form geometry needs positive ASD and ZSD");
    const double n = static_cast<double>(n_elements);
    const double bve = element.bw_elev_rad();
    const double bhe = element.bw_azim_rad();
    // K1 / K2 = (sigma_h / B_he) / (sigma_v / B_ve), K1 K2 = N
    const double aspect = (spread.asd_rad() * bve) / (spread.zsd_rad() * bhe);
    return ContinuousGeometry{std::sqrt(n * aspect), std::sqrt(n / aspect)};
}

std::vector<ArrayGeometry> scan_geometries(long n_elements)
{
    check_budget(n_elements);
    std::vector<ArrayGeometry> out;
    out.reserve(static_cast<std::size_t>(n_elements));
    for (long cols = 1; cols <= n_elements; ++cols)
        out.emplace_back(n_elements / cols, cols);
    return out;
}

OptimizationResult optimal_geometry_integer(long n_elements, const ElementPattern &element,
                                            const AngularSpread &spread,
                                            std::span<const ArrayGeometry> allowed, Execution exec)
{
    check_budget(n_elements);

    std::vector<ArrayGeometry> candidates;
    if (allowed.empty())
    {
        candidates = scan_geometries(n_elements);
    }
    else
    {
        for (const ArrayGeometry &g : allowed)
            if (g.elements() <= n_elements)
                candidates.push_back(g);
        if (candidates.empty())
            throw Error(ErrorCode::InvalidArgument,
                        "no allowed geometry fits the budget of " + std::to_string(n_elements) +
                            " elements");
    }

    std::vector<double> gains(candidates.size());
    kernels::effective_gains(exec, element, spread, candidates, gains);

    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
    {
        const double scale = std::max(gains[i], gains[best]);
        const double diff = gains[i] - gains[best];
        if (diff > kTieTolerance * scale)
            best = i;
        else if (std::abs(diff) <= kTieTolerance * scale && candidates[i].rows() > candidates[best].rows())
            best = i;
    }

    OptimizationResult result;
    if (spread.zsd_rad() > 0.0 && spread.asd_rad() > 0.0)
        result.continuous = optimal_geometry_continuous(n_elements, element, spread);
    result.integer_best = candidates[best];
    result.integer_gain = effective_gain(element, candidates[best], spread);
    result.bound_gain_linear = gain_upper_bound(n_elements, element, spread);
    return result;
}

long max_elements_for_eirp(double eirp_dbm, double per_element_power_dbm, double element_gain_dbi)
{
    if (!std::isfinite(eirp_dbm) || !std::isfinite(per_element_power_dbm) ||
        !std::isfinite(element_gain_dbi))
        throw Error(ErrorCode::InvalidArgument, "EIRP inputs must be finite");
    const double exponent = (eirp_dbm - per_element_power_dbm - element_gain_dbi) / 20.0;
    const double limit = std::floor(std::pow(10.0, exponent));
    if (limit < 1.0)
        throw Error(ErrorCode::EirpBelowSingleElement,
                    "EIRP below single-element emission: " + std::to_string(eirp_dbm) +
                        " dBm < " + std::to_string(per_element_power_dbm + element_gain_dbi) + " dBm");
    if (limit > 1e15)
        throw Error(ErrorCode::InvalidArgument, "EIRP allows an unrepresentable element count");
    return static_cast<long>(limit);
}

double hybrid_gain(long n_subpanels, double subpanel_gain_linear)
{
    if (n_subpanels < 1 || !(subpanel_gain_linear > 0.0))
        throw Error(ErrorCode::InvalidArgument, "hybrid gain needs M >= 1 and a positive sub-panel gain");
    return static_cast<double>(n_subpanels) * subpanel_gain_linear;
}

double hybrid_gain_db(long n_subpanels, double subpanel_gain_db)
{
    if (n_subpanels < 1)
        throw Error(ErrorCode::InvalidArgument, "hybrid gain needs M >= 1");
    return linear_to_db(static_cast<double>(n_subpanels)) + subpanel_gain_db;
}

} // namespace beammatch
