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

// Angular spread estimation from sub-array gain measurements.
//
// For two sub-arrays sharing a row count n1 with column counts k1 != k2 and
// r = G^2(n1, k2) / G^2(n1, k1), the normalized azimuth spread satisfies
//
//     (r - 1) * (sigma_h / B_he)^2 = 1 / k1^2 - r / k2^2
//
// and transposed for elevation. Each usable pair contributes one row of an
// overdetermined scalar linear system that is solved by least squares.
// Estimates stay in the normalized squared form (sigma / B_element)^2.

#include "beammatch/beam_model.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace beammatch
{

struct SubArrayGain
{
    long rows = 1;
    long cols = 1;
    double gain_linear = 1.0;
};

struct SpreadEstimate
{
    double asd_over_bhe_sq = 0.0;
    double zsd_over_bve_sq = 0.0;
    std::size_t n_pairs_asd = 0;
    std::size_t n_pairs_zsd = 0;
    // Pairs dropped because their gain ratio was 1 (zero denominator).
    std::size_t n_skipped_asd = 0;
    std::size_t n_skipped_zsd = 0;
};

struct MeasurementRecord
{
    long rows = 1;
    long cols = 1;
    double tx_power_dbm = 0.0;
    double rx_power_dbm = 0.0;
};

/// Weight of one pair equation in the least-squares fit. The reference
/// (smaller) sub-array comes first.
using PairWeighting = std::function<double(const SubArrayGain &, const SubArrayGain &)>;

/// (sigma_h / B_he)^2 from two sub-arrays with equal rows and different cols.
/// May be negative on noisy data.
double estimate_asd_sq_pair(const SubArrayGain &m_a, const SubArrayGain &m_b);

/// (sigma_v / B_ve)^2 from two sub-arrays with equal cols and different rows.
double estimate_zsd_sq_pair(const SubArrayGain &m_a, const SubArrayGain &m_b);

/// Least-squares combination over every usable pair, clamped at zero.
/// An empty weighting means ordinary (unweighted) least squares.
SpreadEstimate estimate_ls(std::span<const SubArrayGain> measurements,
                           const PairWeighting &weighting = {});

double predict_subarray_gain(const SubArrayGain &reference, const SpreadEstimate &estimate,
                             long target_rows, long target_cols);

/// Gains relative to the baseline entry: (Rx - Rx_0) - (Tx - Tx_0) in dB.
std::vector<SubArrayGain> relative_gains_from_power(std::span<const MeasurementRecord> measurements,
                                                    std::size_t baseline_index);

/// Converts a normalized estimate into absolute spreads for a known element.
AngularSpread absolute_spread(const SpreadEstimate &estimate, const ElementPattern &element);

} // namespace beammatch
