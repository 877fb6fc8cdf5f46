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

// Serial vs OpenMP timings for the hot kernels. Also checks both paths agree.

#include "beammatch/geometry_optimizer.hpp"
#include "beammatch/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

using namespace beammatch;

namespace
{

double best_of(int reps, const std::function<void()> &fn)
{
    double best = 1e300;
    for (int i = 0; i < reps; ++i)
    {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const char *name, double serial_s, double omp_s, bool same)
{
    std::printf("%-20s serial %9.3f ms  omp %9.3f ms  speedup %5.2fx  %s\n", name, 1e3 * serial_s, 1e3 * omp_s,
                serial_s / omp_s, same ? "identical" : "MISMATCH");
}

} // namespace

int main()
{
    std::printf("threads: %d\n", omp_get_max_threads());
    constexpr int reps = 5;

    {
        const std::size_t n = 1 << 20;
        std::vector<double> in(n);
        for (std::size_t i = 0; i < n; ++i)
            in[i] = std::exp(-0.5 * std::pow((static_cast<double>(i) - n / 2.0) / 4000.0, 2));
        std::vector<double> taps(2001);
        for (std::size_t t = 0; t < taps.size(); ++t)
            taps[t] = std::exp(-0.5 * std::pow((static_cast<double>(t) - 1000.0) / 200.0, 2));
        const kernels::CircularTaps ct{-1000, taps};
        std::vector<double> a(n);
        std::vector<double> b(n);
        const double ts = best_of(reps, [&] { kernels::serial::circular_filter(in, ct, a); });
        const double tp = best_of(reps, [&] { kernels::omp::circular_filter(in, ct, b); });
        row("circular_filter", ts, tp, a == b);
    }

    {
        const kernels::MultipathSetup setup{0.1, 0.05, 0.02, 0.2, 20, 42};
        std::vector<double> a(100000);
        std::vector<double> b(a.size());
        const double ts = best_of(reps, [&] { kernels::serial::realization_powers(setup, a); });
        const double tp = best_of(reps, [&] { kernels::omp::realization_powers(setup, b); });
        row("realization_powers", ts, tp, a == b);
    }

    {
        const std::vector<ArrayGeometry> geoms = scan_geometries(1 << 20);
        const ElementPattern element = element_pattern_from_gain(5.0);
        const AngularSpread spread = AngularSpread::from_degrees(3.0, 15.0);
        std::vector<double> a(geoms.size());
        std::vector<double> b(geoms.size());
        const double ts = best_of(reps, [&] { kernels::serial::effective_gains(element, spread, geoms, a); });
        const double tp = best_of(reps, [&] { kernels::omp::effective_gains(element, spread, geoms, b); });
        row("effective_gains", ts, tp, a == b);
    }
    return 0;
}
