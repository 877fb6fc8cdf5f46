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

#include "beammatch/commands.hpp"

#include "beammatch/error.hpp"
#include "beammatch/geometry_optimizer.hpp"
#include "beammatch/measurement_csv.hpp"
#include "beammatch/spread_estimator.hpp"
#include "beammatch/units.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace beammatch
{

namespace
{

std::string geometry_text(const ArrayGeometry &g)
{
    return std::to_string(g.rows()) + "x" + std::to_string(g.cols());
}

OptimizationResult optimize_scenario(const Scenario &scenario)
{
    return optimal_geometry_integer(scenario.element_budget(), scenario.element(), scenario.spread(),
                                    scenario.allowed_geometries);
}

} // namespace

void cmd_optimize(const Scenario &scenario, std::ostream &out, std::ostream *csv_out)
{
    scenario.validate();
    const long budget = scenario.element_budget();
    const OptimizationResult result = optimize_scenario(scenario);

    out << "element budget: " << budget;
    if (scenario.budget_capped_by_eirp())
        out << " (EIRP cap at " << format_fixed(*scenario.eirp_dbm) << " dBm)";
    out << '\n';
    if (result.continuous)
        out << "continuous optimum: " << format_fixed(result.continuous->rows_real) << " x "
            << format_fixed(result.continuous->cols_real) << '\n';
    else
        out << "continuous optimum: n/a (degenerate spread)\n";
    out << "integer optimum: " << geometry_text(result.integer_best) << '\n';
    out << "effective gain: " << format_fixed(result.integer_gain.effective_dbi) << " dBi\n";
    out << "nominal gain: " << format_fixed(result.integer_gain.nominal_dbi) << " dBi\n";
    out << "upper bound: " << format_fixed(linear_to_db(result.bound_gain_linear)) << " dBi\n";

    if (csv_out)
    {
        *csv_out << "rows,cols,effective_gain_dbi,nominal_gain_dbi,upper_bound_dbi\n";
        *csv_out << result.integer_best.rows() << ',' << result.integer_best.cols() << ','
                 << format_fixed(result.integer_gain.effective_dbi) << ','
                 << format_fixed(result.integer_gain.nominal_dbi) << ','
                 << format_fixed(linear_to_db(result.bound_gain_linear)) << '\n';
    }
}

std::vector<SweepRow> sweep_rows(const Scenario &scenario, const std::vector<ArrayGeometry> &geometries)
{
    scenario.validate();
    const ElementPattern element = scenario.element();
    const AngularSpread spread = scenario.spread();
    const OptimizationResult result = optimize_scenario(scenario);

    std::vector<ArrayGeometry> list = geometries.empty() ? scan_geometries(scenario.element_budget()) : geometries;
    if (std::find(list.begin(), list.end(), result.integer_best) == list.end())
        list.push_back(result.integer_best);

    std::vector<SweepRow> rows;
    rows.reserve(list.size());
    for (const ArrayGeometry &g : list)
        rows.push_back(SweepRow{g, effective_gain(element, g, spread).effective_dbi, g == result.integer_best});
    return rows;
}

void cmd_sweep(const Scenario &scenario, const std::vector<ArrayGeometry> &geometries, std::ostream &csv_out)
{
    const std::vector<SweepRow> rows = sweep_rows(scenario, geometries);
    csv_out << kSweepHeader << '\n';
    for (const SweepRow &r : rows)
        csv_out << r.geometry.rows() << ',' << r.geometry.cols() << ',' << format_fixed(r.effective_gain_dbi)
                << ',' << (r.optimal ? 1 : 0) << '\n';
}

void cmd_estimate(const EstimateOptions &options, std::ostream &out)
{
    const std::vector<MeasurementRecord> records = load_measurements(options.measurements_path);
    const std::vector<SubArrayGain> gains = relative_gains_from_power(records, options.baseline_index);
    const SpreadEstimate est = estimate_ls(gains);

    out << "records: " << records.size() << " (baseline " << geometry_text({records[options.baseline_index].rows,
                                                                             records[options.baseline_index].cols})
        << ")\n";
    out << "asd_over_bhe_sq: " << format_fixed(est.asd_over_bhe_sq) << '\n';
    out << "zsd_over_bve_sq: " << format_fixed(est.zsd_over_bve_sq) << '\n';
    out << "asd pairs: " << est.n_pairs_asd << " (skipped " << est.n_skipped_asd << ")\n";
    out << "zsd pairs: " << est.n_pairs_zsd << " (skipped " << est.n_skipped_zsd << ")\n";
    if (est.n_skipped_asd > 0)
        out << "warning: skipped " << est.n_skipped_asd << " indeterminate ASD pair(s)\n";
    if (est.n_skipped_zsd > 0)
        out << "warning: skipped " << est.n_skipped_zsd << " indeterminate ZSD pair(s)\n";

    if (options.element)
    {
        const AngularSpread abs = absolute_spread(est, *options.element);
        out << "asd_deg: " << format_fixed(rad_to_deg(abs.asd_rad())) << '\n';
        out << "zsd_deg: " << format_fixed(rad_to_deg(abs.zsd_rad())) << '\n';
    }
    if (options.predict)
    {
        const double g = predict_subarray_gain(gains[options.baseline_index], est, options.predict->rows(),
                                               options.predict->cols());
        out << "predicted gain " << geometry_text(*options.predict) << ": " << format_fixed(linear_to_db(g))
            << " dB relative to baseline\n";
    }
}

bool cmd_validate(const Scenario &scenario, const ValidateOptions &options, std::ostream &out)
{
    scenario.validate();
    const ElementPattern element = scenario.element();
    const AngularSpread spread = scenario.spread();
    const ArrayGeometry geom = options.geometry ? *options.geometry : optimize_scenario(scenario).integer_best;

    const GainReport analytic = effective_gain(element, geom, spread);
    const BeamPattern nominal = nominal_beamwidths(element, geom);
    const double conv = convolution_oracle_gain(nominal, spread);
    const McEstimate mc = monte_carlo_effective_gain(nominal, spread, options.mc);

    const double conv_delta_db = linear_to_db(conv) - analytic.effective_dbi;
    const bool conv_ok = std::abs(conv_delta_db) <= kOracleToleranceDb;
    const double mc_dev = std::abs(mc.gain_linear - analytic.effective_linear);
    const bool mc_ok = mc_dev <= kMonteCarloSigmas * mc.standard_error;

    out << "geometry: " << geometry_text(geom) << '\n';
    out << "monte-carlo config: " << options.mc.n_realizations << " realizations x " << options.mc.n_paths
        << " paths, seed " << options.mc.seed << '\n';
    out << "analytic gain: " << format_fixed(analytic.effective_dbi) << " dBi\n";
    out << "convolution gain: " << format_fixed(linear_to_db(conv)) << " dBi (delta "
        << format_fixed(conv_delta_db) << " dB, tolerance " << format_fixed(kOracleToleranceDb) << " dB) "
        << (conv_ok ? "PASS" : "FAIL") << '\n';
    out << "monte-carlo gain: " << format_fixed(linear_to_db(mc.gain_linear)) << " dBi ("
        << format_fixed(mc.gain_linear) << " +- " << format_fixed(mc.standard_error) << " linear, deviation "
        << format_fixed(mc.standard_error > 0.0 ? mc_dev / mc.standard_error : 0.0) << " se) "
        << (mc_ok ? "PASS" : "FAIL") << '\n';
    out << "result: " << (conv_ok && mc_ok ? "PASS" : "FAIL") << '\n';
    return conv_ok && mc_ok;
}

} // namespace beammatch
