#include "hafield/commands.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hafield/constants.hpp"
#include "hafield/errors.hpp"
#include "hafield/field_kernels.hpp"
#include "hafield/format.hpp"

namespace hafield {

using nlohmann::json;

ToleranceProfile parse_tolerance_profile(const std::string& name) {
  if (name == "paper") return ToleranceProfile::paper;
  if (name == "strict") return ToleranceProfile::strict;
  throw ConfigError("unknown tolerance profile \"" + name + "\" (expected paper or strict)");
}

json rounded(const json& j) {
  if (j.is_number_float()) return round_sig9(j.get<double>());
  if (j.is_array() || j.is_object()) {
    json out = j;
    for (auto it = out.begin(); it != out.end(); ++it) *it = rounded(*it);
    return out;
  }
  return j;
}

namespace {

void write_json(std::ostream& os, const json& j, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (pretty) os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v)) os << format_sci(v);
    else os << "null";
  } else if (j.is_object() || j.is_array()) {
    const bool obj = j.is_object();
    if (j.empty()) {
      os << (obj ? "{}" : "[]");
      return;
    }
    os << (obj ? '{' : '[');
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ',';
      first = false;
      newline(depth + 1);
      if (obj) os << json(it.key()).dump() << (pretty ? ": " : ":");
      write_json(os, *it, indent, depth + 1);
    }
    newline(depth);
    os << (obj ? '}' : ']');
  } else {
    os << j.dump();
  }
}

}  // namespace

std::string json_text(const json& j, int indent) {
  std::ostringstream os;
  write_json(os, j, indent, 0);
  return os.str();
}

void write_scenario_comment(std::ostream& os, const ExperimentScenario& scenario) {
  os << "# scenario: " << json_text(scenario_to_json(scenario), -1) << '\n';
}

// ---- reproduce-paper -------------------------------------------------------

bool ReproductionReport::all_pass() const {
  for (const auto& r : rows) {
    if (!r.pass()) return false;
  }
  return true;
}

ReproductionReport reproduce_estimates(ToleranceProfile profile) {
  const ExperimentScenario s = reference_scenario();
  const auto& c = constants();
  const double voltage = s.beam.voltage;
  const double k = s.coil_constant();
  const double i_max = 10.0;

  const double p_mec = mechanical_momentum(voltage);
  const double p_add = c.e * k;
  const double p_low = effective_momentum(voltage, -k * i_max);
  const double p_high = effective_momentum(voltage, k * i_max);
  auto small_angle_i = [&](double p) {
    return de_broglie_lambda(p) * s.grating.screen_distance / s.grating.spacing;
  };
  const double inv_low = inverse_interfringe(voltage, -i_max, k, s.grating);
  const double inv_high = inverse_interfringe(voltage, i_max, k, s.grating);

  auto row = [&](std::string name, std::string eq, std::string unit, double computed,
                 double published, double tol, bool flagged) {
    const double dev = std::abs(computed - published) / std::abs(published);
    if (profile == ToleranceProfile::strict) tol = 1e-3;
    return ReportRow{std::move(name), std::move(eq), std::move(unit), computed,
                     published,       dev,           tol,             flagged};
  };

  ReproductionReport rep;
  rep.rows = {
      row("p_mec", "Eq2", "kg m/s", p_mec, 9.351e-23, 2e-3, false),
      row("p_add coefficient", "Eq10", "kg m/s/A", p_add, 7.331e-24, 5e-3, false),
      row("K (from published p_add / e)", "Eq10", "T m/A", k, 7.331e-24 / c.e, 5e-3, false),
      row("P_eff min (I=-10 A)", "Eq3", "kg m/s", p_low, 2.040e-23, 2e-2, true),
      row("P_eff max (I=+10 A)", "Eq3", "kg m/s", p_high, 16.662e-23, 2e-2, true),
      row("i (I=0)", "Eq1", "m", small_angle_i(p_mec), 2.776e-3, 3e-3, false),
      row("i_eff min (I=+10 A)", "Eq4", "m", small_angle_i(p_high), 1.558e-3, 1.5e-2, false),
      row("i_eff max (I=-10 A)", "Eq4", "m", small_angle_i(p_low), 12.725e-3, 1.5e-2, false),
      row("1/i_eff min (I=-10 A)", "Eq5", "1/m", inv_low, 78.58, 1.5e-2, false),
      row("1/i_eff max (I=+10 A)", "Eq5", "1/m", inv_high, 641.84, 1.5e-2, false),
  };
  return rep;
}

void write_report_text(std::ostream& os, const ReproductionReport& rep) {
  os << std::left << std::setw(30) << "quantity" << std::setw(6) << "eq" << std::setw(17)
     << "computed" << std::setw(17) << "published" << std::setw(11) << "dev" << std::setw(9)
     << "tol" << "status\n";
  for (const auto& r : rep.rows) {
    std::ostringstream dev, tol;
    dev << std::fixed << std::setprecision(3) << 100.0 * r.rel_deviation << '%';
    tol << std::fixed << std::setprecision(2) << 100.0 * r.tolerance << '%';
    os << std::left << std::setw(30) << r.name << std::setw(6) << r.equation << std::setw(17)
       << format_sci(r.computed) << std::setw(17) << format_sci(r.published) << std::setw(11)
       << dev.str() << std::setw(9) << tol.str() << (r.pass() ? "PASS" : "FAIL")
       << (r.flagged ? " (flagged)" : "") << '\n';
  }
  os << (rep.all_pass() ? "all rows within tolerance\n" : "tolerance exceeded\n");
}

void write_report_csv(std::ostream& os, const ReproductionReport& rep) {
  os << "quantity,equation,unit,computed,published,rel_deviation,tolerance,flagged,status\n";
  for (const auto& r : rep.rows) {
    os << r.name << ',' << r.equation << ',' << r.unit << ',' << format_sci(r.computed) << ','
       << format_sci(r.published) << ',' << format_sci(r.rel_deviation) << ','
       << format_sci(r.tolerance) << ',' << (r.flagged ? "true" : "false") << ','
       << (r.pass() ? "pass" : "fail") << '\n';
  }
}

json report_json(const ReproductionReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"quantity", r.name},
                    {"equation", r.equation},
                    {"unit", r.unit},
                    {"computed", r.computed},
                    {"published", r.published},
                    {"rel_deviation", r.rel_deviation},
                    {"tolerance", r.tolerance},
                    {"flagged", r.flagged},
                    {"pass", r.pass()}});
  }
  return rounded(json{{"rows", rows}, {"all_pass", rep.all_pass()}});
}

// ---- sweep -----------------------------------------------------------------

std::vector<double> SweepSpec::values() const {
  validate();
  const auto count = static_cast<long>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) v.push_back(from + static_cast<double>(i) * step);
  return v;
}

void SweepSpec::validate() const {
  if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step)) {
    throw ConfigError("sweep bounds must be finite");
  }
  if (!(step > 0.0)) throw ConfigError("sweep step must be positive");
  if (!(from <= to)) throw ConfigError("sweep requires from <= to");
  if (std::floor((to - from) / step + 1e-9) < 1.0) {
    throw ConfigError("sweep must produce at least two samples");
  }
}

SweepResult run_sweep(const ExperimentScenario& scenario, const SweepSpec& spec) {
  scenario.validate();
  const std::vector<double> values = spec.values();
  const double k = scenario.coil_constant();
  const auto& gs = scenario.grating;

  SweepResult res{spec, std::vector<SweepRow>(values.size()), json::object()};
  kernels::parallel_for(values.size(), [&](std::size_t i) {
    const bool by_current = spec.variable == SweepVariable::current;
    const double u = by_current ? scenario.beam.voltage : values[i];
    const double current = by_current ? values[i] : scenario.current;
    SweepRow row{values[i], false, NAN, NAN, NAN, NAN};
    try {
      row.p_eff = effective_momentum(u, k * current);
      row.lambda_eff = de_broglie_lambda(row.p_eff);
      row.interfringe = row.lambda_eff * gs.screen_distance / gs.spacing;
      row.inverse_interfringe = inverse_interfringe(u, current, k, gs);
      row.ok = true;
    } catch (const DomainError&) {
      row.ok = false;
    }
    res.rows[i] = row;
  });

  std::vector<LinearResponseSample> samples;
  for (const auto& r : res.rows) {
    if (!r.ok) continue;
    if (spec.variable == SweepVariable::current) {
      samples.push_back({scenario.beam.voltage, r.value, r.inverse_interfringe});
    } else {
      samples.push_back({r.value, scenario.current, r.inverse_interfringe});
    }
  }
  json fit{{"samples", samples.size()},
           {"alpha_analytic", inverse_interfringe_alpha(gs)},
           {"beta_analytic", inverse_interfringe_beta(k, gs)}};
  try {
    if (spec.variable == SweepVariable::voltage && scenario.current == 0.0) {
      std::vector<double> x, y;
      for (const auto& s : samples) {
        x.push_back(std::sqrt(s.voltage));
        y.push_back(s.inverse_interfringe);
      }
      const OriginFit f = fit_through_origin(x, y);
      fit["model"] = "inverse_interfringe = alpha * sqrt(U)";
      fit["alpha"] = f.slope;
      fit["r_squared"] = f.r_squared;
    } else {
      const LinearResponseFit f = linear_response_fit(samples);
      fit["model"] = "inverse_interfringe = alpha * sqrt(U) + beta * I";
      fit["alpha"] = f.alpha;
      fit["beta"] = f.beta;
      fit["r_squared"] = f.r_squared;
    }
  } catch (const FitError& e) {
    fit["error"] = e.what();
  }
  res.fit = fit;
  return res;
}

void write_sweep_csv(std::ostream& os, const ExperimentScenario& scenario, const SweepResult& res) {
  const bool by_current = res.spec.variable == SweepVariable::current;
  os << "# hafield sweep over " << (by_current ? "current" : "voltage") << '\n';
  write_scenario_comment(os, scenario);
  os << (by_current ? "I_A" : "U_V")
     << ",P_eff_kg_m_s,lambda_eff_m,interfringe_m,inverse_interfringe_per_m,status\n";
  for (const auto& r : res.rows) {
    os << format_sci(r.value) << ',' << format_sci(r.p_eff) << ',' << format_sci(r.lambda_eff)
       << ',' << format_sci(r.interfringe) << ',' << format_sci(r.inverse_interfringe) << ','
       << (r.ok ? "ok" : "error:model-domain") << '\n';
  }
}

// ---- field-map ------------------------------------------------------------

Box default_region(const ExperimentScenario& scenario) {
  return centered_cube(0.5 * scenario.inner_radius());
}

FieldMap field_map(const ExperimentScenario& scenario, const Box& region, std::array<int, 3> grid,
                   int segments_per_turn) {
  scenario.validate();
  for (int g : grid) {
    if (g < 2) throw DomainError("field map grid needs at least 2 points per axis");
  }
  FieldMap map;
  map.points = grid_points(region, grid);

  if (const auto* w = scenario.winding()) {
    check_bore_region(*w, region);
    const auto segments = build_winding(*w, segments_per_turn);
    const double h = 1e-4 * w->inner_radius;
    map.a = kernels::coil_a_parallel(segments, map.points);
    map.b = kernels::coil_b_parallel(segments, map.points, h);
    map.report = summarize_samples(region, grid, map.a, map.b, annular_coil_a(w->ideal()));
    map.report.segment_count = segments.size();
    map.solver = "segments";
  } else {
    const AnnularCoilIdeal coil = scenario.ideal_coil();
    if (!(region.max_transverse_extent() < coil.inner_radius - kWireGuard)) {
      throw DomainError("region reaches the winding: max transverse extent >= R1");
    }
    const double a = annular_coil_a(coil);
    map.a.assign(map.points.size(), Vec3{0.0, 0.0, a});
    map.b.assign(map.points.size(), Vec3{});
    map.report = summarize_samples(region, grid, map.a, map.b, a);
    map.solver = "ideal";
  }
  return map;
}

void write_field_map_csv(std::ostream& os, const ExperimentScenario& scenario, const FieldMap& map) {
  os << "# hafield field map, solver " << map.solver << '\n';
  write_scenario_comment(os, scenario);
  os << "x,y,z,Ax,Ay,Az,Bx,By,Bz\n";
  for (std::size_t i = 0; i < map.points.size(); ++i) {
    const Vec3& p = map.points[i];
    const Vec3& a = map.a[i];
    const Vec3& b = map.b[i];
    os << format_sci(p.x) << ',' << format_sci(p.y) << ',' << format_sci(p.z) << ','
       << format_sci(a.x) << ',' << format_sci(a.y) << ',' << format_sci(a.z) << ','
       << format_sci(b.x) << ',' << format_sci(b.y) << ',' << format_sci(b.z) << '\n';
  }
}

json homogeneity_json(const HomogeneityReport& rep) {
  auto vec = [](const Vec3& v) { return json::array({v.x, v.y, v.z}); };
  return rounded(json{
      {"region", {{"lo", vec(rep.region.lo)}, {"hi", vec(rep.region.hi)}}},
      {"grid", rep.grid},
      {"mean_A", vec(rep.mean_a)},
      {"max_rel_deviation", rep.max_rel_deviation},
      {"max_B_magnitude", rep.max_b_magnitude},
      {"ideal_A", rep.ideal_a},
      {"rel_error_vs_ideal", rep.rel_error_vs_ideal},
      {"segment_count", rep.segment_count},
  });
}

// ---- diffract -------------------------------------------------------------

DiffractionResult diffract(const ExperimentScenario& scenario, int k_max, MomentumModel model) {
  scenario.validate();
  const double a = annular_coil_a(scenario.ideal_coil());
  return {a, fringe_pattern(scenario.beam, scenario.grating, a, k_max, model)};
}

void write_pattern_csv(std::ostream& os, const ExperimentScenario& scenario,
                       const DiffractionResult& res) {
  os << "# hafield fringe pattern\n";
  write_scenario_comment(os, scenario);
  os << "k,theta_k_rad,y_k_m,ring_radius_m\n";
  for (const auto& o : res.pattern.orders) {
    os << o.k << ',' << format_sci(o.theta) << ',' << format_sci(o.y) << ','
       << format_sci(o.ring_radius) << '\n';
  }
}

json pattern_summary_json(const DiffractionResult& res) {
  const auto& p = res.pattern;
  json orders = json::array();
  for (const auto& o : p.orders) {
    orders.push_back({{"k", o.k}, {"theta_k_rad", o.theta}, {"y_k_m", o.y}, {"ring_radius_m", o.ring_radius}});
  }
  return rounded(json{
      {"lambda_m", p.lambda},
      {"P_eff", p.p_eff},
      {"interfringe_m", p.interfringe_small_angle},
      {"interfringe_exact_m", p.interfringe_exact},
      {"small_angle_valid", p.small_angle_valid},
      {"distant_screen_valid", p.distant_screen_valid},
      {"vector_potential_T_m", res.vector_potential},
      {"orders", orders},
  });
}

// ---- validate-coil --------------------------------------------------------

CoilValidation validate_coil(const ExperimentScenario& scenario) {
  scenario.validate();
  const AnnularCoilIdeal ideal = scenario.ideal_coil();
  CoilValidation v{scenario.geometry_checks(), ideal.turns, coil_constant(ideal), {}, {}, {}};
  if (const auto* w = scenario.winding()) {
    CoilWindingSpec unit = *w;
    if (unit.current == 0.0) unit.current = 1.0;  // probe the geometry, not the operating point
    v.segment_count = build_winding(unit, 8).size();
    const std::array<Vec3, 2> probes{Vec3{}, Vec3{0.5 * unit.inner_radius, 0.0, 0.0}};
    v.discretization = converge_segments_per_turn(unit, probes);
    v.center = homogeneity_report(unit, centered_cube(0.1 * unit.inner_radius), {3, 3, 3});
  }
  return v;
}

json coil_validation_json(const CoilValidation& v) {
  json j{{"turns", v.turns},
         {"coil_constant_T_m_per_A", v.coil_constant},
         {"geometry_checks",
          {{"factor", v.checks.factor},
           {"L_over_D", std::isfinite(v.checks.length_over_d) ? json(v.checks.length_over_d) : json("inf")},
           {"L_over_D_ok", v.checks.length_ok()},
           {"D_over_phi", v.checks.d_over_width},
           {"D_over_phi_ok", v.checks.screen_ok()},
           {"phi_over_a", v.checks.width_over_a},
           {"phi_over_a_ok", v.checks.beam_ok()}}}};
  if (v.segment_count) j["segment_count"] = *v.segment_count;
  if (v.discretization) {
    j["discretization"] = {{"segments_per_turn", v.discretization->segments_per_turn},
                           {"last_rel_change", v.discretization->last_rel_change},
                           {"converged", v.discretization->converged}};
  }
  if (v.center) j["center_homogeneity"] = homogeneity_json(*v.center);
  return rounded(j);
}

}  // namespace hafield
