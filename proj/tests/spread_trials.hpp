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

// Seeded noisy-measurement experiment comparing the least-squares spread
// estimate against each single-pair estimate.

#include "beammatch/spread_estimator.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace trials
{

inline const std::vector<std::pair<long, long>> kFiveSubArrays = {{4, 4}, {4, 8}, {4, 16}, {8, 4}, {16, 4}};

struct RmseSummary
{
    double ls_asd = 0.0;
    double ls_zsd = 0.0;
    double median_pair_asd = 0.0;
    double median_pair_zsd = 0.0;
};

inline double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Multiplicative gain noise at -30 dB: G * (1 + e), e ~ N(0, sqrt(1e-3)).
inline RmseSummary noisy_rmse(double z, double a, int n_trials, std::uint64_t seed)
{
    using beammatch::SubArrayGain;
    const double noise_std = std::sqrt(1e-3);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, noise_std);

    // pair indices into kFiveSubArrays: ASD pairs share rows = 4, ZSD pairs share cols = 4
    const std::vector<std::pair<int, int>> asd_pairs = {{0, 1}, {0, 2}, {1, 2}};
    const std::vector<std::pair<int, int>> zsd_pairs = {{0, 3}, {0, 4}, {3, 4}};

    double ls_asd = 0.0;
    double ls_zsd = 0.0;
    std::vector<double> pair_asd(asd_pairs.size(), 0.0);
    std::vector<double> pair_zsd(zsd_pairs.size(), 0.0);
    int used = 0;
    for (int t = 0; t < n_trials; ++t)
    {
        std::vector<SubArrayGain> gains;
        for (const auto &[rows, cols] : kFiveSubArrays)
            gains.push_back(SubArrayGain{rows, cols, oracle::subarray_gain(rows, cols, z, a) * (1.0 + noise(rng))});

        const beammatch::SpreadEstimate est = beammatch::estimate_ls(gains);
        ls_asd += (est.asd_over_bhe_sq - a) * (est.asd_over_bhe_sq - a);
        ls_zsd += (est.zsd_over_bve_sq - z) * (est.zsd_over_bve_sq - z);
        for (std::size_t p = 0; p < asd_pairs.size(); ++p)
        {
            const double e = std::max(0.0, beammatch::estimate_asd_sq_pair(gains[asd_pairs[p].first],
                                                                           gains[asd_pairs[p].second]));
            pair_asd[p] += (e - a) * (e - a);
        }
        for (std::size_t p = 0; p < zsd_pairs.size(); ++p)
        {
            const double e = std::max(0.0, beammatch::estimate_zsd_sq_pair(gains[zsd_pairs[p].first],
                                                                           gains[zsd_pairs[p].second]));
            pair_zsd[p] += (e - z) * (e - z);
        }
        ++used;
    }
    const auto rmse = [used](double ss) { return std::sqrt(ss / used); };
    for (double &v : pair_asd)
        v = rmse(v);
    for (double &v : pair_zsd)
        v = rmse(v);
    return RmseSummary{rmse(ls_asd), rmse(ls_zsd), median(pair_asd), median(pair_zsd)};
}

} // namespace trials
