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

// Numerical checks of the Gaussian beam model that do not share its algebra:
// sampled patterns convolved with the channel spectrum on a grid, Monte-Carlo
// multipath power, and the physical array factor of a half-wavelength ULA.
//
// Patterns are separable. A SampledPattern keeps one density per axis, each
// integrating to one, and the 2-D power pattern is
//
//     value(i, j) = 4 pi * azim_density[i] * elev_density[j]
//
// so that its integral over the (phi, theta) plane is 4 pi and the peak of a
// Gaussian pattern is 2 / (B_h B_v).

#include "beammatch/beam_model.hpp"
#include "beammatch/kernels.hpp"
#include "beammatch/units.hpp"

#include <cstdint>
#include <vector>

namespace beammatch
{

/// Uniform samples: azimuth -pi + i * da over [-pi, pi), elevation
/// -H + j * de over [-H, H). H defaults to pi/2 and is widened when a pattern
/// plus its spread would otherwise wrap.
class AngularGrid
{
public:
    AngularGrid(long n_azim, long n_elev, double elev_half_span_rad = kPi / 2.0);

    /// Default grid for a nominal pattern under a spread: spacing is the finest
    /// of 0.05 deg, beamwidth / 8 and spread / 8, with at most 2e6 azimuth
    /// samples; elevation spans +-max(pi/2, 8 * effective elevation width).
    static AngularGrid for_pattern(const BeamPattern &nominal, const AngularSpread &spread);

    long n_azim() const noexcept { return n_azim_; }
    long n_elev() const noexcept { return n_elev_; }
    double elev_half_span_rad() const noexcept { return elev_half_span_; }
    double azim_spacing() const noexcept;
    double elev_spacing() const noexcept;
    double azimuth(long i) const noexcept;
    double elevation(long j) const noexcept;
    long azim_center() const noexcept { return n_azim_ / 2; }
    long elev_center() const noexcept { return n_elev_ / 2; }

    friend bool operator==(const AngularGrid &, const AngularGrid &) = default;

private:
    long n_azim_;
    long n_elev_;
    double elev_half_span_;
};

struct SampledPattern
{
    AngularGrid grid;
    std::vector<double> azim_density;
    std::vector<double> elev_density;

    double value(long i, long j) const noexcept;
    double peak_gain() const noexcept;
    /// Integral of value() over the grid.
    double total_power() const noexcept;
    /// total_power() / 4 pi; peak_gain() / mean_power() is the directional gain.
    double mean_power() const noexcept;
    /// Square root of the second moment about boresight, per axis.
    double rms_width_azim() const noexcept;
    double rms_width_elev() const noexcept;
};

struct McConfig
{
    int n_paths = 20;
    int n_realizations = 10000;
    std::uint64_t seed = 0;
};

struct McEstimate
{
    double gain_linear = 0.0;
    double standard_error = 0.0;
};

/// Throws E_GRID_TOO_COARSE when the spacing exceeds beamwidth / 8.
SampledPattern gaussian_pattern_sampled(double bw_elev_rad, double bw_azim_rad, const AngularGrid &grid);

/// Circular convolution of each axis with a normalized Gaussian of the
/// corresponding spread. A zero spread leaves that axis untouched. Throws
/// E_GRID_TOO_COARSE when a nonzero spread is under two grid spacings.
SampledPattern convolve_effective_pattern(const SampledPattern &nominal, const AngularSpread &spread,
                                          const AngularGrid &grid, Execution exec = Execution::Parallel);

/// Peak gain of the convolved pattern on the default grid.
double convolution_oracle_gain(const BeamPattern &nominal, const AngularSpread &spread,
                               Execution exec = Execution::Parallel);

McEstimate monte_carlo_effective_gain(const ElementPattern &element, const ArrayGeometry &geom,
                                      const AngularSpread &spread, const McConfig &config,
                                      Execution exec = Execution::Parallel);

McEstimate monte_carlo_effective_gain(const BeamPattern &nominal, const AngularSpread &spread,
                                      const McConfig &config, Execution exec = Execution::Parallel);

/// Main-lobe RMS width of a k-element half-wavelength broadside ULA divided
/// by the width of a single element, fitted the same way. Close to 1 / k.
double upa_array_factor_beamwidth(long k_elements_along_axis);

} // namespace beammatch
