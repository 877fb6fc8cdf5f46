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

#include "beammatch/channel_oracle.hpp"

#include "beammatch/error.hpp"
#include "beammatch/units.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>

namespace beammatch
{

namespace
{

constexpr double kDefaultSpacing = deg_to_rad(0.05);
constexpr long kMaxAzimSamples = 2'000'000;
constexpr double kResolutionFactor = 8.0;
// Gaussian taps are kept out to exp(-x^2 / 2) = 1e-17.
constexpr double kTapSigmas = 8.87;

double gaussian_density(double x, double sigma) noexcept
{
    const double u = x / sigma;
    return std::exp(-0.5 * u * u) / (std::sqrt(2.0 * kPi) * sigma);
}

std::vector<double> sampled_density(long n, double spacing, double origin, double sigma)
{
    std::vector<double> out(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = gaussian_density(origin + static_cast<double>(i) * spacing, sigma);
    return out;
}

// Normalized Gaussian filter on a circle of n samples. Images beyond the
// circle are folded back so the taps always sum to one.
struct GaussianTaps
{
    std::vector<double> values;
    long first_offset = 0;
};

GaussianTaps gaussian_taps(long n, double spacing, double sigma)
{
    const long half = static_cast<long>(std::ceil(kTapSigmas * sigma / spacing));
    GaussianTaps taps;
    if (2 * half + 1 <= n)
    {
        taps.first_offset = -half;
        taps.values.resize(static_cast<std::size_t>(2 * half + 1));
        for (long d = -half; d <= half; ++d)
            taps.values[static_cast<std::size_t>(d + half)] = gaussian_density(static_cast<double>(d) * spacing, sigma);
    }
    else
    {
        taps.first_offset = -(n / 2);
        taps.values.assign(static_cast<std::size_t>(n), 0.0);
        for (long d = -half; d <= half; ++d)
        {
            long slot = (d - taps.first_offset) % n;
            if (slot < 0)
                slot += n;
            taps.values[static_cast<std::size_t>(slot)] += gaussian_density(static_cast<double>(d) * spacing, sigma);
        }
    }
    const double sum = std::accumulate(taps.values.begin(), taps.values.end(), 0.0);
    for (double &v : taps.values)
        v /= sum;
    return taps;
}

std::vector<double> convolve_axis(const std::vector<double> &density, double spacing, double sigma,
                                  Execution exec)
{
    if (sigma == 0.0)
        return density;
    const GaussianTaps taps = gaussian_taps(static_cast<long>(density.size()), spacing, sigma);
    std::vector<double> out(density.size());
    kernels::circular_filter(exec, density, kernels::CircularTaps{taps.first_offset, taps.values}, out);
    return out;
}

double second_moment_width(const std::vector<double> &density, double origin, double spacing)
{
    double mass = 0.0;
    double moment = 0.0;
    for (std::size_t i = 0; i < density.size(); ++i)
    {
        const double x = origin + static_cast<double>(i) * spacing;
        mass += density[i];
        moment += density[i] * x * x;
    }
    return std::sqrt(moment / mass);
}

} // namespace

AngularGrid::AngularGrid(long n_azim, long n_elev, double elev_half_span_rad)
    : n_azim_(n_azim), n_elev_(n_elev), elev_half_span_(elev_half_span_rad)
{
    if (n_azim < 2 || n_elev < 2 || n_azim % 2 != 0 || n_elev % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "angular grid sizes must be even and >= 2");
    if (n_azim > kMaxAzimSamples)
        throw Error(ErrorCode::InvalidArgument, "angular grid exceeds 2e6 azimuth samples");
    if (!(elev_half_span_rad > 0.0) || !std::isfinite(elev_half_span_rad))
        throw Error(ErrorCode::InvalidArgument, "elevation half-span must be positive");
}

AngularGrid AngularGrid::for_pattern(const BeamPattern &nominal, const AngularSpread &spread)
{
    double spacing = std::min({kDefaultSpacing, nominal.bw_elev_rad() / kResolutionFactor,
                               nominal.bw_azim_rad() / kResolutionFactor});
    for (double s : {spread.zsd_rad(), spread.asd_rad()})
        if (s > 0.0)
            spacing = std::min(spacing, s / kResolutionFactor);

    long n_azim = 2 * static_cast<long>(std::ceil(kPi / spacing));
    n_azim = std::min(n_azim, kMaxAzimSamples);
    const double effective_elev = std::hypot(nominal.bw_elev_rad(), spread.zsd_rad());
    const double half_span = std::max(kPi / 2.0, 8.0 * effective_elev);
    const long n_elev = 2 * static_cast<long>(std::ceil(half_span / spacing));
    return AngularGrid(n_azim, n_elev, half_span);
}

double AngularGrid::azim_spacing() const noexcept { return 2.0 * kPi / static_cast<double>(n_azim_); }
double AngularGrid::elev_spacing() const noexcept { return 2.0 * elev_half_span_ / static_cast<double>(n_elev_); }
double AngularGrid::azimuth(long i) const noexcept { return -kPi + static_cast<double>(i) * azim_spacing(); }
double AngularGrid::elevation(long j) const noexcept
{
    return -elev_half_span_ + static_cast<double>(j) * elev_spacing();
}

double SampledPattern::value(long i, long j) const noexcept
{
    return 4.0 * kPi * azim_density[static_cast<std::size_t>(i)] * elev_density[static_cast<std::size_t>(j)];
}

double SampledPattern::peak_gain() const noexcept
{
    return 4.0 * kPi * *std::max_element(azim_density.begin(), azim_density.end()) *
           *std::max_element(elev_density.begin(), elev_density.end());
}

double SampledPattern::total_power() const noexcept
{
    return 4.0 * kPi * mean_power();
}

double SampledPattern::mean_power() const noexcept
{
    const double azim_mass = std::accumulate(azim_density.begin(), azim_density.end(), 0.0) * grid.azim_spacing();
    const double elev_mass = std::accumulate(elev_density.begin(), elev_density.end(), 0.0) * grid.elev_spacing();
    return azim_mass * elev_mass;
}

double SampledPattern::rms_width_azim() const noexcept
{
    return second_moment_width(azim_density, -kPi, grid.azim_spacing());
}

double SampledPattern::rms_width_elev() const noexcept
{
    return second_moment_width(elev_density, -grid.elev_half_span_rad(), grid.elev_spacing());
}

SampledPattern gaussian_pattern_sampled(double bw_elev_rad, double bw_azim_rad, const AngularGrid &grid)
{
    const BeamPattern beam(bw_elev_rad, bw_azim_rad);
    const double spacing = std::max(grid.azim_spacing(), grid.elev_spacing());
    const double finest = std::min(beam.bw_elev_rad(), beam.bw_azim_rad()) / kResolutionFactor;
    if (spacing > finest * (1.0 + 1e-12))
        throw Error(ErrorCode::GridTooCoarse,
                    "grid too coarse: spacing " + std::to_string(rad_to_deg(spacing)) +
                        " deg exceeds beamwidth/8 = " + std::to_string(rad_to_deg(finest)) + " deg");

    return SampledPattern{
        grid,
        sampled_density(grid.n_azim(), grid.azim_spacing(), -kPi, bw_azim_rad),
        sampled_density(grid.n_elev(), grid.elev_spacing(), -grid.elev_half_span_rad(), bw_elev_rad),
    };
}

SampledPattern convolve_effective_pattern(const SampledPattern &nominal, const AngularSpread &spread,
                                          const AngularGrid &grid, Execution exec)
{
    if (!(nominal.grid == grid))
        throw Error(ErrorCode::InvalidArgument, "pattern was sampled on a different grid");
    const auto check = [](double sigma, double spacing, const char *axis) {
        if (sigma > 0.0 && sigma < 2.0 * spacing)
            throw Error(ErrorCode::GridTooCoarse,
                        std::string("grid too coarse: ") + axis + " spread " +
                            std::to_string(rad_to_deg(sigma)) + " deg is under two grid spacings");
    };
    check(spread.asd_rad(), grid.azim_spacing(), "azimuth");
    check(spread.zsd_rad(), grid.elev_spacing(), "elevation");

    return SampledPattern{
        grid,
        convolve_axis(nominal.azim_density, grid.azim_spacing(), spread.asd_rad(), exec),
        convolve_axis(nominal.elev_density, grid.elev_spacing(), spread.zsd_rad(), exec),
    };
}

double convolution_oracle_gain(const BeamPattern &nominal, const AngularSpread &spread, Execution exec)
{
    const AngularGrid grid = AngularGrid::for_pattern(nominal, spread);
    const SampledPattern pattern = gaussian_pattern_sampled(nominal.bw_elev_rad(), nominal.bw_azim_rad(), grid);
    return convolve_effective_pattern(pattern, spread, grid, exec).peak_gain();
}

McEstimate monte_carlo_effective_gain(const ElementPattern &element, const ArrayGeometry &geom,
                                      const AngularSpread &spread, const McConfig &config, Execution exec)
{
    return monte_carlo_effective_gain(nominal_beamwidths(element, geom), spread, config, exec);
}

McEstimate monte_carlo_effective_gain(const BeamPattern &nominal, const AngularSpread &spread,
                                      const McConfig &config, Execution exec)
{
    if (config.n_paths < 1 || config.n_realizations < 1)
        throw Error(ErrorCode::InvalidArgument, "Monte-Carlo config needs n_paths >= 1 and n_realizations >= 1");

    // Without scattering every path arrives from boresight and they merge into one.
    if (spread.is_zero())
        return McEstimate{directional_gain(nominal), 0.0};

    const kernels::MultipathSetup setup{nominal.bw_elev_rad(), nominal.bw_azim_rad(), spread.zsd_rad(),
                                        spread.asd_rad(),      config.n_paths,        config.seed};
    std::vector<double> powers(static_cast<std::size_t>(config.n_realizations));
    kernels::realization_powers(exec, setup, powers);

    // Fixed-order reduction keeps the result independent of the schedule.
    const double n = static_cast<double>(powers.size());
    const double mean = std::accumulate(powers.begin(), powers.end(), 0.0) / n;
    if (powers.size() == 1)
        return McEstimate{mean, std::numeric_limits<double>::infinity()};
    double ss = 0.0;
    for (double p : powers)
        ss += (p - mean) * (p - mean);
    return McEstimate{mean, std::sqrt(ss / (n - 1.0) / n)};
}

double upa_array_factor_beamwidth(long k_elements_along_axis)
{
    if (k_elements_along_axis < 1)
        throw Error(ErrorCode::InvalidArgument, "array factor needs k >= 1");

    // Power is integrated over direction cosine u = sin(theta), in which solid
    // angle is uniform. The fit is the Gaussian whose peak and power above
    // -10 dB match the main lobe; its constant erf factor cancels in the ratio.
    constexpr long kSamples = 100'000; // per side
    constexpr double kFloor = 0.1;
    const double du = 1.0 / static_cast<double>(kSamples);

    const auto lobe_width = [&](long k) {
        const auto pattern = [k](double u) {
            std::complex<double> sum(0.0, 0.0);
            for (long m = 0; m < k; ++m)
                sum += std::polar(1.0, kPi * static_cast<double>(m) * u);
            return std::norm(sum) / static_cast<double>(k * k);
        };
        double power = pattern(0.0) * du;
        double previous = pattern(0.0);
        for (long s = 1; s <= kSamples; ++s)
        {
            const double value = pattern(static_cast<double>(s) * du);
            if (value < kFloor || value > previous)
                break;
            power += 2.0 * value * du;
            previous = value;
        }
        return power / (std::sqrt(2.0 * kPi) * std::erf(std::sqrt(std::log(10.0))) * pattern(0.0));
    };

    if (k_elements_along_axis == 1)
        return 1.0;
    return lobe_width(k_elements_along_axis) / lobe_width(1);
}

} // namespace beammatch
