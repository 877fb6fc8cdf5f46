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

// beammatch command-line front end.
//
//   beammatch optimize --elements 256 --element-gain-dbi 5 --asd-deg 22 --zsd-deg 5
//   beammatch sweep    --elements 256 --element-gain-dbi 5 --asd-deg 14 --zsd-deg 0.6 --geometries all
//   beammatch estimate measurements.csv --baseline 0 --element-gain-dbi 5 --predict 16 16
//   beammatch validate --rows 8 --cols 16 --element-gain-dbi 8 --asd-deg 16 --zsd-deg 1 --elements 128
//
// Exit codes: 0 success, 1 user error, 2 internal failure or failed validation.
// Errors are printed as a single line "error[E_CODE]: message" on stderr.

#include "beammatch/commands.hpp"
#include "beammatch/measurement_csv.hpp"
#include "beammatch/error.hpp"
#include "beammatch/units.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace
{

constexpr int kExitUserError = 1;
constexpr int kExitInternal = 2;

int fail(const char *code, const std::string &message, int exit_code)
{
    std::string one_line = message;
    for (char &c : one_line)
        if (c == '\n')
            c = ' ';
    std::cerr << "error[" << code << "]: " << one_line << '\n';
    return exit_code;
}

// Scenario flags shared by optimize, sweep and validate. Values stay as text
// so file and command line go through the same parser.
struct ScenarioFlags
{
    std::string file;
    std::map<std::string, std::string> values;

    void attach(CLI::App &cmd)
    {
        cmd.add_option("--scenario", file, "Scenario file (key = value); flags override it");
        for (const std::string &key : beammatch::scenario_keys())
            cmd.add_option("--" + key, values[key]);
    }

    beammatch::Scenario build(const CLI::App &cmd) const
    {
        beammatch::Scenario s = file.empty() ? beammatch::Scenario{} : beammatch::load_scenario_file(file);
        for (const auto &[key, value] : values)
            if (cmd.count("--" + key) > 0)
                beammatch::set_scenario_field(s, key, value);
        s.validate();
        return s;
    }
};

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Effective beamforming gain, array geometry optimization and angular spread estimation"};
    app.require_subcommand(1);

    CLI::App *optimize = app.add_subcommand("optimize", "Gain-maximizing array geometry for a scenario");
    ScenarioFlags optimize_flags;
    optimize_flags.attach(*optimize);
    std::string optimize_csv;
    optimize->add_option("--csv", optimize_csv, "Also write a one-row CSV summary to this path");

    CLI::App *sweep = app.add_subcommand("sweep", "Effective gain per geometry as CSV");
    ScenarioFlags sweep_flags;
    sweep_flags.attach(*sweep);
    std::string sweep_geometries = "all";
    std::string sweep_out;
    sweep->add_option("--geometries", sweep_geometries, "'all' or a list like 64x4,16x16");
    sweep->add_option("--out", sweep_out, "Write CSV to this path instead of stdout");

    CLI::App *estimate = app.add_subcommand("estimate", "Estimate ASD/ZSD from sub-array power measurements");
    std::string measurements_path;
    std::size_t baseline = 0;
    double est_gain_dbi = 0.0;
    double est_bw_elev = 0.0;
    double est_bw_azim = 0.0;
    std::vector<long> predict;
    estimate->add_option("measurements", measurements_path, "CSV with header " + std::string(beammatch::kMeasurementHeader))
        ->required();
    estimate->add_option("--baseline", baseline, "Index of the baseline record");
    auto *gain_opt = estimate->add_option("--element-gain-dbi", est_gain_dbi);
    auto *elev_opt = estimate->add_option("--element-bw-elev-deg", est_bw_elev);
    auto *azim_opt = estimate->add_option("--element-bw-azim-deg", est_bw_azim);
    gain_opt->excludes(elev_opt)->excludes(azim_opt);
    elev_opt->needs(azim_opt);
    azim_opt->needs(elev_opt);
    estimate->add_option("--predict", predict, "ROWS COLS of a sub-array to predict")->expected(2);

    CLI::App *validate = app.add_subcommand("validate", "Check analytic gain against the numerical oracles");
    ScenarioFlags validate_flags;
    validate_flags.attach(*validate);
    long val_rows = 0;
    long val_cols = 0;
    beammatch::McConfig mc;
    auto *rows_opt = validate->add_option("--rows", val_rows);
    auto *cols_opt = validate->add_option("--cols", val_cols);
    rows_opt->needs(cols_opt);
    cols_opt->needs(rows_opt);
    validate->add_option("--realizations", mc.n_realizations);
    validate->add_option("--paths", mc.n_paths);
    validate->add_option("--seed", mc.seed);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        return fail("E_USAGE", e.what(), kExitUserError);
    }

    try
    {
        if (optimize->parsed())
        {
            const beammatch::Scenario s = optimize_flags.build(*optimize);
            if (optimize_csv.empty())
            {
                beammatch::cmd_optimize(s, std::cout);
            }
            else
            {
                std::ofstream csv(optimize_csv);
                if (!csv)
                    return fail("E_IO", "cannot write '" + optimize_csv + "'", kExitUserError);
                beammatch::cmd_optimize(s, std::cout, &csv);
            }
        }
        else if (sweep->parsed())
        {
            const beammatch::Scenario s = sweep_flags.build(*sweep);
            std::vector<beammatch::ArrayGeometry> list;
            if (sweep_geometries != "all")
                list = beammatch::parse_geometry_list(sweep_geometries);
            if (sweep_out.empty())
            {
                beammatch::cmd_sweep(s, list, std::cout);
            }
            else
            {
                std::ofstream csv(sweep_out);
                if (!csv)
                    return fail("E_IO", "cannot write '" + sweep_out + "'", kExitUserError);
                beammatch::cmd_sweep(s, list, csv);
            }
        }
        else if (estimate->parsed())
        {
            beammatch::EstimateOptions opts;
            opts.measurements_path = measurements_path;
            opts.baseline_index = baseline;
            if (gain_opt->count() > 0)
                opts.element = beammatch::element_pattern_from_gain(est_gain_dbi);
            else if (elev_opt->count() > 0)
                opts.element = beammatch::ElementPattern(beammatch::deg_to_rad(est_bw_elev),
                                                         beammatch::deg_to_rad(est_bw_azim));
            if (!predict.empty())
                opts.predict = beammatch::ArrayGeometry(predict[0], predict[1]);
            beammatch::cmd_estimate(opts, std::cout);
        }
        else if (validate->parsed())
        {
            const beammatch::Scenario s = validate_flags.build(*validate);
            beammatch::ValidateOptions opts;
            opts.mc = mc;
            if (rows_opt->count() > 0)
                opts.geometry = beammatch::ArrayGeometry(val_rows, val_cols);
            if (!beammatch::cmd_validate(s, opts, std::cout))
                return fail("E_VALIDATION", "oracle disagreement, see report", kExitInternal);
        }
    }
    catch (const beammatch::Error &e)
    {
        return fail(beammatch::error_code_name(e.code()), e.what(), kExitUserError);
    }
    catch (const std::exception &e)
    {
        return fail("E_INTERNAL", e.what(), kExitInternal);
    }
    return 0;
}
