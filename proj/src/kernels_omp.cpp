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

#include <vector>

namespace beammatch::kernels
{

namespace omp
{

void circular_filter(std::span<const double> in, const CircularTaps &taps, std::span<double> out)
{
    if (in.size() != out.size() || in.empty() || taps.taps.empty() || taps.taps.size() > in.size())
        throw Error(ErrorCode::InvalidArgument, "circular filter: bad argument sizes");
    const std::vector<double> extended = detail::unroll_circle(in, taps);
    const long n = static_cast<long>(in.size());
    const long t_len = static_cast<long>(taps.taps.size());
    const double *ext = extended.data();
    const double *tp = taps.taps.data();
    double *dst = out.data();

    #pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i)
    {
        double acc = 0.0;
        for (long t = 0; t < t_len; ++t)
            acc += ext[i + t] * tp[t];
        dst[i] = acc;
    }
}

void realization_powers(const MultipathSetup &setup, std::span<double> out)
{
    const long n = static_cast<long>(out.size());
    double *dst = out.data();

    #pragma omp parallel for schedule(static)
    for (long r = 0; r < n; ++r)
        dst[r] = realization_power(setup, static_cast<std::uint64_t>(r));
}

void effective_gains(const ElementPattern &element, const AngularSpread &spread,
                     std::span<const ArrayGeometry> geometries, std::span<double> out)
{
    if (geometries.size() != out.size())
        throw Error(ErrorCode::InvalidArgument, "effective_gains: output size mismatch");
    const long n = static_cast<long>(geometries.size());

    #pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i)
        out[i] = effective_gain_linear(element, static_cast<double>(geometries[i].rows()),
                                       static_cast<double>(geometries[i].cols()), spread);
}

} // namespace omp
} // namespace beammatch::kernels
