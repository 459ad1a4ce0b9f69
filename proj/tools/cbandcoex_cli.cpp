// SPDX-License-Identifier: Apache-2.0
//
// cbandcoex - interference and coordination-distance engine for 5G / C-band FSS
// Copyright (C) 2026 The cbandcoex Authors
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

// cbandcoex command-line tool.
//
//   cbandcoex assess --scenario FILE --distance-km X
//   cbandcoex solve  --scenario FILE
//   cbandcoex figure --id N [--out PATH]
//   cbandcoex sweep  --param NAME --from A --to B --steps K
//
// Exit codes: 0 success, 1 validation error, 2 infeasible scenario.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cbandcoex/figures.hpp"
#include "cbandcoex/report.hpp"
#include "cbandcoex/scenario_io.hpp"
#include "cbandcoex/solver.hpp"

namespace fs = std::filesystem;
using namespace cbandcoex;

namespace {

constexpr int exit_validation = 1;
constexpr int exit_infeasible = 2;

constexpr const char *main_lobe_caveat =
    "warning: the base station is inside the main lobe of the earth station (off-axis angle below "
    "phi_min); the sidelobe envelope does not apply there and filtering or shielding will not be effective";

Scenario scenario_or_default(const std::string &path) {
    return path.empty() ? default_scenario() : load_scenario(path);
}

fs::path output_path(const std::string &requested, const std::string &fallback_name) {
    if (!requested.empty())
        return requested;
    if (const char *dir = std::getenv("CBANDCOEX_OUTPUT_DIR"); dir && *dir)
        return fs::path(dir) / fallback_name;
    return fallback_name;
}

// Writes through a string so a failed computation never leaves a partial file.
void write_file(const fs::path &path, const std::string &content) {
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ValidationError("cannot write " + path.string());
    out << content;
    if (!out)
        throw ValidationError("write failed for " + path.string());
}

void emit_rows(const std::vector<ReportRow> &rows, const std::string &out, const std::string &json_out) {
    std::ostringstream csv;
    write_report_csv(csv, rows);
    if (out.empty())
        std::cout << csv.str();
    else
        write_file(out, csv.str());
    if (!json_out.empty()) {
        std::ostringstream js;
        write_report_json(js, rows);
        write_file(json_out, js.str());
    }
}

std::vector<SweepValue> sweep_values(double from, double to, int steps, bool log_spacing) {
    if (steps < 1)
        throw ValidationError("--steps must be >= 1");
    if (log_spacing && (from <= 0.0 || to <= 0.0))
        throw ValidationError("--log requires positive --from and --to");
    std::vector<SweepValue> out;
    for (int i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) / steps;
        out.emplace_back(log_spacing ? std::pow(10.0, std::log10(from) + t * (std::log10(to) - std::log10(from)))
                                     : from + t * (to - from));
    }
    return out;
}

std::vector<SweepValue> clutter_values(const std::vector<std::string> &names) {
    std::vector<SweepValue> out;
    if (names.empty()) {
        for (auto kind : builtin_clutter_kinds)
            out.emplace_back(ClutterCategory::builtin(kind));
        return out;
    }
    for (const auto &n : names) {
        const auto kind = parse_clutter_kind(n);
        if (!kind || *kind == ClutterKind::Custom)
            throw ValidationError("unknown clutter category '" + n + "'");
        out.emplace_back(ClutterCategory::builtin(*kind));
    }
    return out;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Interference and coordination-distance engine for 5G base stations and C-band FSS receivers"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    std::string json_path;

    auto *assess_cmd = app.add_subcommand("assess", "Evaluate all received powers at one distance");
    double distance_km = 0.0;
    assess_cmd->add_option("--scenario", scenario_path, "Scenario file (JSON); defaults when omitted");
    assess_cmd->add_option("--distance-km", distance_km, "BS to earth-station distance in km")->required();
    assess_cmd->add_option("--out", out_path, "Write CSV here instead of stdout");
    assess_cmd->add_option("--json", json_path, "Also write the row as JSON");

    auto *solve_cmd = app.add_subcommand("solve", "Minimum separation distance for a scenario");
    solve_cmd->add_option("--scenario", scenario_path, "Scenario file (JSON); defaults when omitted");
    solve_cmd->add_option("--json", json_path, "Also write the solution as JSON");

    auto *figure_cmd = app.add_subcommand("figure", "Regenerate a figure table as CSV");
    int figure_id = 0;
    figure_cmd->add_option("--id", figure_id, "Figure number, 3-9")->required();
    figure_cmd->add_option("--out", out_path, "Output CSV path (default figure_<N>.csv)");
    figure_cmd->add_option("--scenario", scenario_path, "Base scenario overriding the built-in preset");
    figure_cmd->add_option("--json", json_path, "Also write a JSON mirror");

    auto *sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter over a range");
    std::string param_name;
    double from = 0.0;
    double to = 0.0;
    int steps = 10;
    bool log_spacing = false;
    std::vector<std::string> clutter_names;
    std::optional<double> at_distance;
    sweep_cmd->add_option("--param", param_name, "distance | eirp | off_axis | filter | clutter")->required();
    sweep_cmd->add_option("--from", from, "First value");
    sweep_cmd->add_option("--to", to, "Last value");
    sweep_cmd->add_option("--steps", steps, "Number of intervals (values = steps + 1)");
    sweep_cmd->add_flag("--log", log_spacing, "Logarithmic spacing");
    sweep_cmd->add_option("--values", clutter_names, "Clutter categories for --param clutter")->delimiter(',');
    sweep_cmd->add_option("--at-distance-km", at_distance, "Evaluate powers here instead of at each row's coordination distance");
    sweep_cmd->add_option("--scenario", scenario_path, "Scenario file (JSON); defaults when omitted");
    sweep_cmd->add_option("--out", out_path, "Write CSV here instead of stdout");
    sweep_cmd->add_option("--json", json_path, "Also write a JSON mirror");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_validation;
    }

    try {
        if (*assess_cmd) {
            const Scenario s = scenario_or_default(scenario_path);
            const DistanceKm d{distance_km};
            const Assessment a = assess(s, d);
            std::vector<ReportRow> rows{make_report_row(format_number(distance_km), a, min_separation_distance(s))};
            emit_rows(rows, out_path, json_path);
            if (a.main_lobe_adjacent)
                std::cerr << main_lobe_caveat << '\n';
            return 0;
        }

        if (*solve_cmd) {
            const Scenario s = scenario_or_default(scenario_path);
            const SeparationSolution sol = min_separation_distance(s);
            std::cout << "min_distance_km: " << format_number(sol.distance.km()) << '\n'
                      << "binding_limit_dbm: " << format_number(sol.binding_limit.value()) << '\n'
                      << "limit_kind: " << to_string(sol.limit_kind) << '\n'
                      << "off_axis_deg: " << format_number(sol.off_axis.degrees()) << '\n'
                      << "main_lobe_flag: " << (sol.main_lobe_flag ? "true" : "false") << '\n';
            if (!json_path.empty()) {
                std::ostringstream js;
                js << "{\n  \"min_distance_km\": " << format_number(sol.distance.km())
                   << ",\n  \"binding_limit_dbm\": " << format_number(sol.binding_limit.value())
                   << ",\n  \"limit_kind\": \"" << to_string(sol.limit_kind) << "\""
                   << ",\n  \"off_axis_deg\": " << format_number(sol.off_axis.degrees())
                   << ",\n  \"main_lobe_flag\": " << (sol.main_lobe_flag ? "true" : "false") << "\n}\n";
                write_file(json_path, js.str());
            }
            if (sol.main_lobe_flag) {
                std::cerr << main_lobe_caveat << '\n';
                return exit_infeasible;
            }
            return 0;
        }

        if (*figure_cmd) {
            figure_title(figure_id);
            const Scenario base = scenario_or_default(scenario_path);
            std::ostringstream csv;
            write_figure_csv(csv, figure_id, base);
            const fs::path path = output_path(out_path, "figure_" + std::to_string(figure_id) + ".csv");
            write_file(path, csv.str());
            if (!json_path.empty()) {
                std::ostringstream js;
                write_figure_json(js, figure_id, base);
                write_file(json_path, js.str());
            }
            std::cout << path.string() << '\n';
            return 0;
        }

        if (*sweep_cmd) {
            const auto param = parse_sweep_parameter(param_name);
            if (!param)
                throw ValidationError("unknown sweep parameter '" + param_name +
                                      "' (expected distance, eirp, off_axis, filter or clutter)");
            SweepSpec spec;
            spec.parameter = *param;
            spec.fixed_scenario = scenario_or_default(scenario_path);
            if (*param == SweepParameter::ClutterCategory) {
                spec.values = clutter_values(clutter_names);
            } else {
                if (sweep_cmd->count("--from") == 0 || sweep_cmd->count("--to") == 0)
                    throw ValidationError("--from and --to are required for numeric sweeps");
                spec.values = sweep_values(from, to, steps, log_spacing);
            }
            if (at_distance)
                spec.evaluation_distance = DistanceKm{*at_distance};
            std::vector<ReportRow> rows;
            for (const auto &r : run_sweep(spec))
                rows.push_back(make_report_row(format_sweep_value(r.value), r.at, r.separation));
            emit_rows(rows, out_path, json_path);
            return 0;
        }
    } catch (const InfeasibleError &e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return exit_infeasible;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const fs::filesystem_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    }
    return 0;
}
