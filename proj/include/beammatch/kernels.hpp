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

// Data-parallel inner loops. Each kernel exists twice: a plain serial
// reference and an OpenMP version. Both produce bit-identical output; the
// OpenMP versions only distribute independent output slots across threads.

#include "beammatch/beam_model.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace beammatch
{

enum class Execution
{
    Serial,
    Parallel,
};

namespace kernels
{

/// Symmetric filter taps over circular offsets [first_offset, first_offset + taps.size()).
struct CircularTaps
{
    long first_offset = 0;
    std::span<const double> taps;
};

/// Per-path input of the multipath power kernel.
struct MultipathSetup
{
    double nominal_bw_elev_rad = 0.0;
    double nominal_bw_azim_rad = 0.0;
    double zsd_rad = 0.0;
    double asd_rad = 0.0;
    int n_paths = 1;
    std::uint64_t seed = 0;
};

namespace detail
{
// extended[q] = in[(q + first_offset) mod n] for q in [0, n + taps - 1).
std::vector<double> unroll_circle(std::span<const double> in, const CircularTaps &taps);
} // namespace detail

/// Received power of one realization: |sum_p sqrt(g(phi_p, theta_p) / P) e^{j psi_p}|^2.
/// The random stream depends only on (seed, realization).
double realization_power(const MultipathSetup &setup, std::uint64_t realization);

namespace serial
{

// out[i] = sum_t in[(i + first_offset + t) mod n] * taps[t]
void circular_filter(std::span<const double> in, const CircularTaps &taps, std::span<double> out);

void realization_powers(const MultipathSetup &setup, std::span<double> out);

void effective_gains(const ElementPattern &element, const AngularSpread &spread,
                     std::span<const ArrayGeometry> geometries, std::span<double> out);

} // namespace serial

namespace omp
{

void circular_filter(std::span<const double> in, const CircularTaps &taps, std::span<double> out);

void realization_powers(const MultipathSetup &setup, std::span<double> out);

void effective_gains(const ElementPattern &element, const AngularSpread &spread,
                     std::span<const ArrayGeometry> geometries, std::span<double> out);

} // namespace omp

inline void circular_filter(Execution exec, std::span<const double> in, const CircularTaps &taps,
                            std::span<double> out)
{
    exec == Execution::Serial ? serial::circular_filter(in, taps, out)
                              : omp::circular_filter(in, taps, out);
}

inline void realization_powers(Execution exec, const MultipathSetup &setup, std::span<double> out)
{
    exec == Execution::Serial ? serial::realization_powers(setup, out)
                              : omp::realization_powers(setup, out);
}

inline void effective_gains(Execution exec, const ElementPattern &element,
                            const AngularSpread &spread, std::span<const ArrayGeometry> geometries,
                            std::span<double> out)
{
    exec == Execution::Serial ? serial::effective_gains(element, spread, geometries, out)
                              : omp::effective_gains(element, spread, geometries, out);
}

} // namespace kernels
} // namespace beammatch
