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

#include "beammatch/kernels.hpp"

#include "beammatch/error.hpp"
#include "beammatch/units.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace beammatch::kernels
{

namespace
{

void check_filter_args(std::span<const double> in, const CircularTaps &taps, std::span<double> out)
{
    if (in.size() != out.size() || in.empty())
        throw Error(ErrorCode::InvalidArgument, "circular filter: input/output size mismatch");
    if (taps.taps.empty() || taps.taps.size() > in.size())
        throw Error(ErrorCode::InvalidArgument, "circular filter: taps longer than the circle");
}

} // namespace

// Unrolled copy of the circle so the inner loop runs over contiguous memory.
std::vector<double> detail::unroll_circle(std::span<const double> in, const CircularTaps &taps)
{
    const long n = static_cast<long>(in.size());
    const long len = n + static_cast<long>(taps.taps.size()) - 1;
    std::vector<double> extended(static_cast<std::size_t>(len));
    long src = taps.first_offset % n;
    if (src < 0)
        src += n;
    for (long q = 0; q < len; ++q)
    {
        extended[static_cast<std::size_t>(q)] = in[static_cast<std::size_t>(src)];
        if (++src == n)
            src = 0;
    }
    return extended;
}

double realization_power(const MultipathSetup &setup, std::uint64_t realization)
{
    std::seed_seq seq{static_cast<std::uint32_t>(setup.seed), static_cast<std::uint32_t>(setup.seed >> 32),
                      static_cast<std::uint32_t>(realization),
                      static_cast<std::uint32_t>(realization >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);

    const double peak = 2.0 / (setup.nominal_bw_elev_rad * setup.nominal_bw_azim_rad);
    const double inv_two_bv2 = 0.5 / (setup.nominal_bw_elev_rad * setup.nominal_bw_elev_rad);
    const double inv_two_bh2 = 0.5 / (setup.nominal_bw_azim_rad * setup.nominal_bw_azim_rad);
    const double path_weight = peak / static_cast<double>(setup.n_paths);

    std::complex<double> field(0.0, 0.0);
    for (int p = 0; p < setup.n_paths; ++p)
    {
        const double azim = setup.asd_rad * normal(rng);
        const double elev = setup.zsd_rad * normal(rng);
        const double psi = phase(rng);
        const double g = path_weight * std::exp(-azim * azim * inv_two_bh2 - elev * elev * inv_two_bv2);
        field += std::polar(std::sqrt(g), psi);
    }
    return std::norm(field);
}

namespace serial
{

void circular_filter(std::span<const double> in, const CircularTaps &taps, std::span<double> out)
{
    check_filter_args(in, taps, out);
    const std::vector<double> extended = detail::unroll_circle(in, taps);
    const std::size_t n = in.size();
    const std::size_t t_len = taps.taps.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        double acc = 0.0;
        for (std::size_t t = 0; t < t_len; ++t)
            acc += extended[i + t] * taps.taps[t];
        out[i] = acc;
    }
}

void realization_powers(const MultipathSetup &setup, std::span<double> out)
{
    for (std::size_t r = 0; r < out.size(); ++r)
        out[r] = realization_power(setup, r);
}

void effective_gains(const ElementPattern &element, const AngularSpread &spread,
                     std::span<const ArrayGeometry> geometries, std::span<double> out)
{
    if (geometries.size() != out.size())
        throw Error(ErrorCode::InvalidArgument, "effective_gains: output size mismatch");
    for (std::size_t i = 0; i < geometries.size(); ++i)
        out[i] = effective_gain_linear(element, static_cast<double>(geometries[i].rows()),
                                       static_cast<double>(geometries[i].cols()), spread);
}

} // namespace serial
} // namespace beammatch::kernels
