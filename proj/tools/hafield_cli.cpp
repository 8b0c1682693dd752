// Command-line front end: reproduce-paper, sweep, field-map, diffract,
// validate-coil. Exit codes: 0 ok, 1 tolerance exceeded, 2 usage/config.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hafield/commands.hpp"
#include "hafield/errors.hpp"
#include "hafield/units.hpp"

namespace {

using namespace hafield;

struct CommonOptions {
  std::string config;
  std::string out;
  std::string format = "csv";
  std::string tolerance_profile = "paper";
  double geometry_factor = 0.0;  // 0 keeps the scenario value
};

void add_common(CLI::App* cmd, CommonOptions& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--config", o.config, "scenario file (JSON, schema hafield-scenario/1)");
  cmd->add_option("--out", o.out, "output file (default: stdout)");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  cmd->add_option("--tolerance-profile", o.tolerance_profile, "paper or strict")
      ->check(CLI::IsMember({"paper", "strict"}));
  cmd->add_option("--geometry-factor", o.geometry_factor,
                  "threshold for the L>>D, D>>phi, phi>>a checks");
}

ExperimentScenario scenario_from(const CommonOptions& o) {
  const auto path = resolve_config_path(o.config);
  ExperimentScenario s = path.empty() ? reference_scenario() : load_scenario(path);
  if (o.geometry_factor > 0.0) s.geometry_factor = o.geometry_factor;
  return s;
}

// Runs `write` against --out or stdout.
template <class Writer>
void emit(const std::string& out, Writer&& write) {
  if (out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + out);
  write(f);
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  f << json_text(j) << '\n';
}

void warn_geometry(const ExperimentScenario& s) {
  const GeometryChecks g = s.geometry_checks();
  if (!g.length_ok()) std::cerr << "warning: L/D = " << g.length_over_d << " below " << g.factor << '\n';
  if (!g.screen_ok()) std::cerr << "warning: D/phi = " << g.d_over_width << " below " << g.factor << '\n';
  if (!g.beam_ok()) std::cerr << "warning: phi/a = " << g.width_over_a << " below " << g.factor << '\n';
}

std::vector<double> split_numbers(const std::string& text, Dimension d) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_si(item, d));
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hafield: homogeneous vector potential coil and electron diffraction model"};
  app.require_subcommand(1);

  CommonOptions repro_opts;
  auto* repro = app.add_subcommand("reproduce-paper", "recompute the published numerical estimates");
  add_common(repro, repro_opts, "text");

  CommonOptions sweep_opts;
  std::string variable = "current", from = "-10", to = "10", step = "1";
  auto* sweep = app.add_subcommand("sweep", "sweep current or voltage; writes CSV plus fit JSON");
  add_common(sweep, sweep_opts, "csv");
  sweep->add_option("--variable", variable, "current or voltage")
      ->check(CLI::IsMember({"current", "voltage"}));
  sweep->add_option("--from", from, "start value, SI or with unit (e.g. \"-10 A\", \"10 kV\")");
  sweep->add_option("--to", to, "end value");
  sweep->add_option("--step", step, "step > 0");

  CommonOptions map_opts;
  std::string region_text, grid_text = "5";
  int segments_per_turn = 8;
  std::string map_current;
  auto* map = app.add_subcommand("field-map", "sample A and B inside the bore");
  add_common(map, map_opts, "csv");
  map->add_option("--region", region_text, "x0,y0,z0,x1,y1,z1 (default: cube of side R1/2)");
  map->add_option("--grid", grid_text, "n or nx,ny,nz points per axis");
  map->add_option("--segments-per-turn", segments_per_turn, "winding discretization");
  map->add_option("--current", map_current, "override the scenario current");

  CommonOptions diff_opts;
  int k_max = 3;
  std::string current_override;
  bool relativistic = false;
  auto* diff = app.add_subcommand("diffract", "fringe pattern for the scenario current");
  add_common(diff, diff_opts, "csv");
  diff->add_option("--kmax", k_max, "highest diffraction order");
  diff->add_option("--current", current_override, "override the scenario current");
  diff->add_flag("--relativistic", relativistic, "use relativistic mechanical momentum");

  CommonOptions coil_opts;
  auto* coil = app.add_subcommand("validate-coil", "check the coil and setup geometry");
  add_common(coil, coil_opts, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (repro->parsed()) {
      const auto rep = reproduce_estimates(parse_tolerance_profile(repro_opts.tolerance_profile));
      emit(repro_opts.out, [&](std::ostream& os) {
        if (repro_opts.format == "json") os << json_text(report_json(rep)) << '\n';
        else if (repro_opts.format == "csv") write_report_csv(os, rep);
        else write_report_text(os, rep);
      });
      return rep.all_pass() ? kExitOk : kExitToleranceExceeded;
    }

    if (sweep->parsed()) {
      const ExperimentScenario s = scenario_from(sweep_opts);
      warn_geometry(s);
      SweepSpec spec;
      spec.variable = variable == "voltage" ? SweepVariable::voltage : SweepVariable::current;
      const Dimension d = spec.variable == SweepVariable::voltage ? dim::voltage : dim::current;
      spec.from = parse_si(from, d);
      spec.to = parse_si(to, d);
      spec.step = parse_si(step, d);
      const SweepResult res = run_sweep(s, spec);
      if (sweep_opts.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : res.rows) {
          rows.push_back({{"value", r.value}, {"ok", r.ok}, {"P_eff", r.p_eff},
                          {"lambda_eff_m", r.lambda_eff}, {"interfringe_m", r.interfringe},
                          {"inverse_interfringe_per_m", r.inverse_interfringe}});
        }
        emit(sweep_opts.out, [&](std::ostream& os) {
          os << json_text(rounded(nlohmann::json{{"rows", rows}, {"fit", res.fit}})) << '\n';
        });
      } else {
        emit(sweep_opts.out, [&](std::ostream& os) {
          write_sweep_csv(os, s, res);
          if (sweep_opts.out.empty()) os << "# fit: " << json_text(res.fit, -1) << '\n';
        });
        if (!sweep_opts.out.empty()) write_json_file(sweep_opts.out + ".fit.json", rounded(res.fit));
      }
      return kExitOk;
    }

    if (map->parsed()) {
      ExperimentScenario s = scenario_from(map_opts);
      if (!map_current.empty()) s.set_current(parse_si(map_current, dim::current));
      warn_geometry(s);
      Box region = default_region(s);
      if (!region_text.empty()) {
        const auto v = split_numbers(region_text, dim::length);
        if (v.size() != 6) throw ConfigError("--region needs six comma-separated values");
        region = {{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
      }
      std::array<int, 3> grid{};
      {
        const auto v = split_numbers(grid_text, dim::none);
        if (v.size() == 1) grid = {int(v[0]), int(v[0]), int(v[0])};
        else if (v.size() == 3) grid = {int(v[0]), int(v[1]), int(v[2])};
        else throw ConfigError("--grid needs one or three values");
      }
      const FieldMap fm = field_map(s, region, grid, segments_per_turn);
      if (map_opts.format == "json") {
        emit(map_opts.out, [&](std::ostream& os) { os << json_text(homogeneity_json(fm.report)) << '\n'; });
      } else {
        emit(map_opts.out, [&](std::ostream& os) { write_field_map_csv(os, s, fm); });
        if (!map_opts.out.empty()) write_json_file(map_opts.out + ".report.json", homogeneity_json(fm.report));
        else std::cerr << json_text(homogeneity_json(fm.report)) << '\n';
      }
      return kExitOk;
    }

    if (diff->parsed()) {
      ExperimentScenario s = scenario_from(diff_opts);
      if (!current_override.empty()) s.set_current(parse_si(current_override, dim::current));
      warn_geometry(s);
      const auto res = diffract(s, k_max,
                                relativistic ? MomentumModel::relativistic : MomentumModel::nonrelativistic);
      if (diff_opts.format == "json") {
        emit(diff_opts.out, [&](std::ostream& os) { os << json_text(pattern_summary_json(res)) << '\n'; });
      } else {
        emit(diff_opts.out, [&](std::ostream& os) { write_pattern_csv(os, s, res); });
        if (!diff_opts.out.empty()) write_json_file(diff_opts.out + ".summary.json", pattern_summary_json(res));
      }
      return kExitOk;
    }

    if (coil->parsed()) {
      const ExperimentScenario s = scenario_from(coil_opts);
      warn_geometry(s);
      const auto v = validate_coil(s);
      emit(coil_opts.out, [&](std::ostream& os) { os << json_text(coil_validation_json(v)) << '\n'; });
      return kExitOk;
    }
  } catch (const hafield::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
