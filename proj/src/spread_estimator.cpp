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

#include "beammatch/spread_estimator.hpp"

#include "beammatch/error.hpp"
#include "beammatch/units.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace beammatch
{

namespace
{

constexpr double kIndeterminateTolerance = 1e-12;

// One pair equation a * x = b in the unknown x = (sigma / B_element)^2.
struct PairEquation
{
    double lhs = 0.0;
    double rhs = 0.0;
};

void check_gain(const SubArrayGain &m)
{
    if (m.rows < 1 || m.cols < 1)
        throw Error(ErrorCode::InvalidArgument, "sub-array needs rows >= 1 and cols >= 1");
    if (!(m.gain_linear > 0.0) || !std::isfinite(m.gain_linear))
        throw Error(ErrorCode::InvalidArgument, "sub-array gain must be positive and finite");
}

// `size_a`/`size_b` are the differing dimension; returns nullopt when r == 1.
std::optional<PairEquation> pair_equation(double gain_a, long size_a, double gain_b, long size_b)
{
    const double ratio = gain_b / gain_a;
    const double r = ratio * ratio;
    if (std::abs(r - 1.0) <= kIndeterminateTolerance)
        return std::nullopt;
    const double ka = static_cast<double>(size_a);
    const double kb = static_cast<double>(size_b);
    return PairEquation{r - 1.0, 1.0 / (ka * ka) - r / (kb * kb)};
}

double solve_pair(const SubArrayGain &m_a, const SubArrayGain &m_b, bool azimuth)
{
    check_gain(m_a);
    check_gain(m_b);
    const long shared_a = azimuth ? m_a.rows : m_a.cols;
    const long shared_b = azimuth ? m_b.rows : m_b.cols;
    const long size_a = azimuth ? m_a.cols : m_a.rows;
    const long size_b = azimuth ? m_b.cols : m_b.rows;
    const char *axis = azimuth ? "ASD" : "ZSD";
    if (shared_a != shared_b || size_a == size_b)
        throw Error(ErrorCode::InvalidPair,
                    std::string("invalid pair for ") + axis + ": " + std::to_string(m_a.rows) + "x" +
                        std::to_string(m_a.cols) + " and " + std::to_string(m_b.rows) + "x" +
                        std::to_string(m_b.cols));
    const auto eq = pair_equation(m_a.gain_linear, size_a, m_b.gain_linear, size_b);
    if (!eq)
        throw Error(ErrorCode::IndeterminatePair,
                    std::string("indeterminate pair for ") + axis + ": equal gains");
    return eq->rhs / eq->lhs;
}

struct AxisFit
{
    double numerator = 0.0;
    double denominator = 0.0;
    std::size_t used = 0;
    std::size_t skipped = 0;
};

} // namespace

double estimate_asd_sq_pair(const SubArrayGain &m_a, const SubArrayGain &m_b)
{
    return solve_pair(m_a, m_b, true);
}

double estimate_zsd_sq_pair(const SubArrayGain &m_a, const SubArrayGain &m_b)
{
    return solve_pair(m_a, m_b, false);
}

SpreadEstimate estimate_ls(std::span<const SubArrayGain> measurements, const PairWeighting &weighting)
{
    for (const SubArrayGain &m : measurements)
        check_gain(m);

    AxisFit asd;
    AxisFit zsd;
    auto accumulate = [&](AxisFit &fit, const SubArrayGain &ref, long ref_size, const SubArrayGain &other,
                          long other_size) {
        const auto eq = pair_equation(ref.gain_linear, ref_size, other.gain_linear, other_size);
        if (!eq)
        {
            ++fit.skipped;
            return;
        }
        const double w = weighting ? weighting(ref, other) : 1.0;
        fit.numerator += w * eq->lhs * eq->rhs;
        fit.denominator += w * eq->lhs * eq->lhs;
        ++fit.used;
    };

    for (std::size_t i = 0; i < measurements.size(); ++i)
    {
        for (std::size_t j = i + 1; j < measurements.size(); ++j)
        {
            const SubArrayGain &p = measurements[i];
            const SubArrayGain &q = measurements[j];
            // The smaller aperture is the reference of each pair.
            if (p.rows == q.rows && p.cols != q.cols)
            {
                if (p.cols < q.cols)
                    accumulate(asd, p, p.cols, q, q.cols);
                else
                    accumulate(asd, q, q.cols, p, p.cols);
            }
            if (p.cols == q.cols && p.rows != q.rows)
            {
                if (p.rows < q.rows)
                    accumulate(zsd, p, p.rows, q, q.rows);
                else
                    accumulate(zsd, q, q.rows, p, p.rows);
            }
        }
    }

    if (asd.used == 0 || !(asd.denominator > 0.0))
        throw Error(ErrorCode::AsdUnidentifiable,
                    "ASD unidentifiable: no measurement pair shares a row count with distinct column counts "
                    "and distinct gains");
    if (zsd.used == 0 || !(zsd.denominator > 0.0))
        throw Error(ErrorCode::ZsdUnidentifiable,
                    "ZSD unidentifiable: no measurement pair shares a column count with distinct row counts "
                    "and distinct gains");

    SpreadEstimate est;
    est.asd_over_bhe_sq = std::max(0.0, asd.numerator / asd.denominator);
    est.zsd_over_bve_sq = std::max(0.0, zsd.numerator / zsd.denominator);
    est.n_pairs_asd = asd.used;
    est.n_pairs_zsd = zsd.used;
    est.n_skipped_asd = asd.skipped;
    est.n_skipped_zsd = zsd.skipped;
    return est;
}

double predict_subarray_gain(const SubArrayGain &reference, const SpreadEstimate &estimate,
                             long target_rows, long target_cols)
{
    check_gain(reference);
    if (target_rows < 1 || target_cols < 1)
        throw Error(ErrorCode::InvalidArgument, "target sub-array needs rows >= 1 and cols >= 1");
    const double z = estimate.zsd_over_bve_sq;
    const double a = estimate.asd_over_bhe_sq;
    if (!(z >= 0.0) || !(a >= 0.0))
        throw Error(ErrorCode::InvalidArgument, "spread estimate must be non-negative");

    auto width = [](long size, double spread_sq) {
        const double s = static_cast<double>(size);
        return std::sqrt(1.0 / (s * s) + spread_sq);
    };
    const double ref_area = width(reference.rows, z) * width(reference.cols, a);
    const double target_area = width(target_rows, z) * width(target_cols, a);
    return reference.gain_linear * (ref_area / target_area);
}

std::vector<SubArrayGain> relative_gains_from_power(std::span<const MeasurementRecord> measurements,
                                                    std::size_t baseline_index)
{
    if (measurements.empty())
        throw Error(ErrorCode::InvalidArgument, "no measurements");
    if (baseline_index >= measurements.size())
        throw Error(ErrorCode::InvalidArgument,
                    "baseline index " + std::to_string(baseline_index) + " out of range (" +
                        std::to_string(measurements.size()) + " records)");

    const MeasurementRecord &base = measurements[baseline_index];
    std::vector<SubArrayGain> out;
    out.reserve(measurements.size());
    for (const MeasurementRecord &m : measurements)
    {
        if (m.rows < 1 || m.cols < 1)
            throw Error(ErrorCode::InvalidArgument, "measurement needs rows >= 1 and cols >= 1");
        const double delta_db = (m.rx_power_dbm - base.rx_power_dbm) - (m.tx_power_dbm - base.tx_power_dbm);
        out.push_back(SubArrayGain{m.rows, m.cols, db_to_linear(delta_db)});
    }
    return out;
}

AngularSpread absolute_spread(const SpreadEstimate &estimate, const ElementPattern &element)
{
    return AngularSpread(element.bw_elev_rad() * std::sqrt(estimate.zsd_over_bve_sq),
                         element.bw_azim_rad() * std::sqrt(estimate.asd_over_bhe_sq));
}

} // namespace beammatch
