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

// Gaussian beam model of a uniform planar array.
//
// All quantities are radians and linear power. Every pair of angular values
// is ordered elevation first, azimuth second.
//
// A beam with RMS widths (B_v, B_h) has the pattern
//
//     g(phi, theta) = 2 / (B_h B_v) * exp(-phi^2 / 2B_h^2) * exp(-theta^2 / 2B_v^2)
//
// and hence directional gain 2 / (B_h B_v). A K1 x K2 array of elements with
// widths (B_ve, B_he) has nominal widths (B_ve / K1, B_he / K2). Channel spread
// (sigma_v, sigma_h) widens each axis in quadrature.

namespace beammatch
{

class ElementPattern
{
public:
    ElementPattern(double bw_elev_rad, double bw_azim_rad);

    double bw_elev_rad() const noexcept { return bw_elev_; }
    double bw_azim_rad() const noexcept { return bw_azim_; }

    /// Peak gain of the element, 2 / (B_ve B_he).
    double gain_linear() const noexcept { return 2.0 / (bw_elev_ * bw_azim_); }

private:
    double bw_elev_;
    double bw_azim_;
};

class ArrayGeometry
{
public:
    ArrayGeometry(long rows, long cols);

    long rows() const noexcept { return rows_; }
    long cols() const noexcept { return cols_; }
    long elements() const noexcept { return rows_ * cols_; }

    friend bool operator==(const ArrayGeometry &, const ArrayGeometry &) = default;

private:
    long rows_;
    long cols_;
};

/// RMS channel spread. zsd is the elevation spread sigma_v, asd the azimuth spread sigma_h.
class AngularSpread
{
public:
    AngularSpread(double zsd_rad, double asd_rad);

    static AngularSpread zero() noexcept { return AngularSpread(); }
    static AngularSpread from_degrees(double zsd_deg, double asd_deg);

    double zsd_rad() const noexcept { return zsd_; }
    double asd_rad() const noexcept { return asd_; }
    bool is_zero() const noexcept { return zsd_ == 0.0 && asd_ == 0.0; }

private:
    AngularSpread() = default;
    double zsd_ = 0.0;
    double asd_ = 0.0;
};

class BeamPattern
{
public:
    BeamPattern(double bw_elev_rad, double bw_azim_rad);

    double bw_elev_rad() const noexcept { return bw_elev_; }
    double bw_azim_rad() const noexcept { return bw_azim_; }

private:
    double bw_elev_;
    double bw_azim_;
};

struct GainReport
{
    double nominal_linear = 0.0;
    double effective_linear = 0.0;
    double upper_bound_linear = 0.0;
    double nominal_dbi = 0.0;
    double effective_dbi = 0.0;
    double upper_bound_dbi = 0.0;

    static GainReport from_linear(double nominal, double effective, double upper_bound) noexcept;
};

/// Symmetric element whose widths reproduce the given gain, B = sqrt(2 / G_e).
ElementPattern element_pattern_from_gain(double gain_dbi);

BeamPattern nominal_beamwidths(const ElementPattern &element, const ArrayGeometry &geom);

// Real-valued dimensions, used when evaluating the continuous optimum.
BeamPattern nominal_beamwidths(const ElementPattern &element, double rows, double cols);

double directional_gain(const BeamPattern &pattern) noexcept;

BeamPattern effective_beamwidths(const BeamPattern &nominal, const AngularSpread &spread);

GainReport effective_gain(const ElementPattern &element, const ArrayGeometry &geom,
                          const AngularSpread &spread);

double effective_gain_linear(const ElementPattern &element, double rows, double cols,
                             const AngularSpread &spread);

} // namespace beammatch
