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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "beammatch/beam_model.hpp"
#include "beammatch/channel_oracle.hpp"
#include "beammatch/geometry_optimizer.hpp"
#include "beammatch/spread_estimator.hpp"
#include "beammatch/units.hpp"

#include "oracles.hpp"
#include "spread_trials.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace beammatch;
using Clock = std::chrono::steady_clock;

namespace
{

int g_failures = 0;

void report(bool ok, const std::string &name, const std::string &detail)
{
    std::printf("%s  %-28s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++g_failures;
}

std::string fmt(const char *f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void table_gains()
{
    const ElementPattern element = element_pattern_from_gain(8.0);
    const AngularSpread spread = AngularSpread::from_degrees(1.0, 16.0);
    const double a = effective_gain(element, ArrayGeometry(8, 16), spread).effective_dbi;
    const double b = effective_gain(element, ArrayGeometry(42, 3), spread).effective_dbi;

    constexpr int reps = 1000;
    double sink = 0.0;
    const auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i)
        sink += effective_gain(element, ArrayGeometry(8, 16 + (i & 1)), spread).effective_linear;
    const double per_call_ms = 1e3 * seconds_since(t0) / reps;

    const bool ok = std::abs(a - 19.91) <= 0.02 && std::abs(b - 24.31) <= 0.02 && per_call_ms < 1.0 && sink > 0.0;
    report(ok, "table-gains", fmt("8x16 %.4f dBi, 42x3 %.4f dBi, %.2e ms/call", a, b, per_call_ms));
}

void optimal_geometries()
{
    const ElementPattern element = element_pattern_from_gain(5.0);
    const double be = oracle::element_bw(5.0);

    const AngularSpread uma = AngularSpread::from_degrees(5.0, 22.0);
    const auto r1 = optimal_geometry_integer(256, element, uma);
    const auto b1 = oracle::brute_force_best(256, be, be, oracle::rad(5.0), oracle::rad(22.0));
    const bool ok1 = r1.integer_best == ArrayGeometry(32, 8) && b1.rows == 32 && b1.cols == 8;

    const AngularSpread umi = AngularSpread::from_degrees(0.6, 14.0);
    const auto r2 = optimal_geometry_integer(256, element, umi);
    const auto b2 = oracle::brute_force_best(256, be, be, oracle::rad(0.6), oracle::rad(14.0));
    const double ref = oracle::db(oracle::gain(85, 3, be, be, oracle::rad(0.6), oracle::rad(14.0)));
    const double gap = std::abs(r2.integer_gain.effective_dbi - ref);
    const bool ok2 = gap <= 0.05 && r2.integer_best.rows() == b2.rows && r2.integer_best.cols() == b2.cols;

    report(ok1 && ok2, "optimal-geometries",
           fmt("UMa %ldx%ld (oracle %ldx%ld), UMi %ldx%ld (oracle %ldx%ld) %.3f dB from 85x3", r1.integer_best.rows(),
               r1.integer_best.cols(), b1.rows, b1.cols, r2.integer_best.rows(), r2.integer_best.cols(), b2.rows,
               b2.cols, gap));
}

void geometry_deltas()
{
    const ElementPattern element = element_pattern_from_gain(5.0);
    const AngularSpread umi = AngularSpread::from_degrees(0.6, 14.0);
    const auto g = [&](long r, long c) { return effective_gain(element, ArrayGeometry(r, c), umi).effective_dbi; };
    const double d1 = g(64, 4) - g(16, 16);
    const double d2 = g(64, 4) - g(1, 256);
    report(std::abs(d1 - 4.0) <= 0.3 && std::abs(d2 - 16.0) <= 0.5, "geometry-deltas",
           fmt("64x4 - 16x16 = %.3f dB, 64x4 - 1x256 = %.3f dB", d1, d2));
}

void nominal_gain()
{
    const double g = effective_gain(element_pattern_from_gain(5.0), ArrayGeometry(16, 16), AngularSpread::zero())
                         .nominal_dbi;
    report(std::abs(g - 29.08) <= 0.05, "nominal-gain", fmt("256 x 5 dBi -> %.4f dBi", g));
}

void eirp_sizing()
{
    const long a = max_elements_for_eirp(43.0, 10.0, 5.0);
    const long b = max_elements_for_eirp(55.0, 10.0, 5.0);
    report(a == 25 && b == 100, "eirp-sizing", fmt("43 dBm -> %ld, 55 dBm -> %ld", a, b));
}

void estimator_round_trip()
{
    std::mt19937_64 rng(20261016);
    std::uniform_real_distribution<double> log_u(-4.0, 0.0);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t)
    {
        const double z = std::pow(10.0, log_u(rng));
        const double a = std::pow(10.0, log_u(rng));
        std::vector<SubArrayGain> gains;
        for (const auto &[rows, cols] : trials::kFiveSubArrays)
            gains.push_back(SubArrayGain{rows, cols, oracle::subarray_gain(rows, cols, z, a, 3.7)});
        const SpreadEstimate est = estimate_ls(gains);
        worst = std::max({worst, oracle::rel_err(est.asd_over_bhe_sq, a), oracle::rel_err(est.zsd_over_bve_sq, z)});
    }
    report(worst <= 1e-10, "estimator-noiseless", fmt("worst relative error %.2e over 100 cases", worst));

    const auto s = trials::noisy_rmse(0.0009, 0.04, 1000, 7);
    const bool ok = s.ls_asd < s.median_pair_asd && s.ls_zsd < s.median_pair_zsd;
    report(ok, "estimator-noisy",
           fmt("RMSE asd LS %.3e vs pair %.3e, zsd LS %.3e vs pair %.3e", s.ls_asd, s.median_pair_asd, s.ls_zsd,
               s.median_pair_zsd));
}

void oracle_grid()
{
    const double widths[] = {1.0, 8.25, 15.5, 22.75, 30.0};
    const double spreads[] = {0.0, 7.5, 15.0, 22.5, 30.0};
    const auto t0 = Clock::now();

    int points = 0;
    int conv_ok = 0;
    int covered = 0;
    double worst_db = 0.0;
    double worst_sigmas = 0.0;
    for (double bv : widths)
        for (double bh : widths)
            for (double sv : spreads)
                for (double sh : spreads)
                {
                    const BeamPattern nominal(deg_to_rad(bv), deg_to_rad(bh));
                    const AngularSpread spread = AngularSpread::from_degrees(sv, sh);
                    const double analytic =
                        2.0 / (std::hypot(oracle::rad(bv), oracle::rad(sv)) * std::hypot(oracle::rad(bh), oracle::rad(sh)));

                    const double conv = convolution_oracle_gain(nominal, spread);
                    const double err_db = std::abs(oracle::db(conv) - oracle::db(analytic));
                    worst_db = std::max(worst_db, err_db);
                    conv_ok += err_db <= 0.2;

                    const McEstimate mc =
                        monte_carlo_effective_gain(nominal, spread, McConfig{20, 10000, static_cast<std::uint64_t>(points)});
                    const double dev = std::abs(mc.gain_linear - analytic);
                    if (mc.standard_error > 0.0)
                        worst_sigmas = std::max(worst_sigmas, dev / mc.standard_error);
                    covered += dev <= 3.0 * mc.standard_error || dev <= 1e-12 * analytic;
                    ++points;
                }
    const double elapsed = seconds_since(t0);

    report(conv_ok == points, "oracle-convolution",
           fmt("%d/%d points within 0.2 dB, worst %.4f dB", conv_ok, points, worst_db));
    report(covered >= 0.99 * points, "oracle-monte-carlo",
           fmt("%d/%d points within 3 SE (%.1f%%), worst %.2f SE", covered, points, 100.0 * covered / points,
               worst_sigmas));
    report(elapsed < 300.0, "oracle-runtime", fmt("grid evaluated in %.1f s", elapsed));
}

void array_factor()
{
    bool ok = true;
    std::string detail;
    for (long k : {2L, 4L, 8L, 16L, 32L})
    {
        const double ratio = upa_array_factor_beamwidth(k);
        const double scaled = ratio * static_cast<double>(k);
        ok = ok && std::abs(scaled - 1.0) <= 0.15;
        detail += fmt("k=%ld %.3f ", k, scaled);
    }
    report(ok, "array-factor", "width*k: " + detail);
}

} // namespace

int main()
{
    const auto t0 = Clock::now();
    try
    {
        table_gains();
        optimal_geometries();
        geometry_deltas();
        nominal_gain();
        eirp_sizing();
        estimator_round_trip();
        oracle_grid();
        array_factor();
    }
    catch (const std::exception &e)
    {
        report(false, "unexpected-exception", e.what());
    }
    const double total = seconds_since(t0);
    report(total < 300.0, "suite-runtime", fmt("%.1f s", total));
    std::printf("%d failure(s)\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
