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

// Array geometry optimization under an element budget N.
//
// With K1 K2 <= N the effective gain is bounded by
//
//     G <= 2 / (sigma_h sigma_v + B_ve B_he / N)
//
// and the bound is met by the real-valued geometry whose nominal widths match
// the channel spread ratio, B_h0 / B_v0 = sigma_h / sigma_v.

#include "beammatch/beam_model.hpp"
#include "beammatch/kernels.hpp"

#include <optional>
#include <span>
#include <vector>

namespace beammatch
{

struct ContinuousGeometry
{
    double rows_real = 0.0;
    double cols_real = 0.0;
};

struct OptimizationResult
{
    /// Absent when either spread component is zero.
    std::optional<ContinuousGeometry> continuous;
    ArrayGeometry integer_best{1, 1};
    GainReport integer_gain;
    double bound_gain_linear = 0.0;
};

double gain_upper_bound(long n_elements, const ElementPattern &element, const AngularSpread &spread);

/// Throws E_DEGENERATE_SPREAD when sigma_v or sigma_h is zero.
ContinuousGeometry optimal_geometry_continuous(long n_elements, const ElementPattern &element,
                                               const AngularSpread &spread);

/// The full-budget scan set: (floor(N / K2), K2) for K2 = 1..N, tallest first.
std::vector<ArrayGeometry> scan_geometries(long n_elements);

/// Best integer geometry with K1 K2 <= N. Candidates are the scan set, or
/// `allowed` filtered to the budget when non-empty. Gains equal within 1e-12
/// relative are ties and resolve toward the taller array (larger K1).
OptimizationResult optimal_geometry_integer(long n_elements, const ElementPattern &element,
                                            const AngularSpread &spread,
                                            std::span<const ArrayGeometry> allowed = {},
                                            Execution exec = Execution::Parallel);

/// floor(10^((EIRP - P_t - G_e) / 20)).
long max_elements_for_eirp(double eirp_dbm, double per_element_power_dbm, double element_gain_dbi);

double hybrid_gain(long n_subpanels, double subpanel_gain_linear);
double hybrid_gain_db(long n_subpanels, double subpanel_gain_db);

} // namespace beammatch
