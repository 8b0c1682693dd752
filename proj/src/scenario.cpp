#include "hafield/scenario.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "hafield/errors.hpp"
#include "hafield/units.hpp"

namespace hafield {

using nlohmann::json;

AnnularCoilIdeal ExperimentScenario::ideal_coil() const {
  AnnularCoilIdeal c = std::visit(
      [](const auto& coil) -> AnnularCoilIdeal {
        if constexpr (std::is_same_v<std::decay_t<decltype(coil)>, CoilWindingSpec>) {
          return coil.ideal();
        } else {
          return coil;
        }
      },
      this->coil);
  c.current = current;
  return c;
}

void ExperimentScenario::set_current(double amperes) {
  current = amperes;
  std::visit([amperes](auto& c) { c.current = amperes; }, coil);
}

double ExperimentScenario::coil_constant() const { return hafield::coil_constant(ideal_coil()); }

double ExperimentScenario::inner_radius() const { return ideal_coil().inner_radius; }

GeometryChecks ExperimentScenario::geometry_checks() const {
  const double length = winding() ? winding()->length : std::numeric_limits<double>::infinity();
  return {geometry_factor, length / grating.screen_distance,
          grating.screen_distance / beam.beam_width, beam.beam_width / grating.spacing};
}

void ExperimentScenario::validate() const {
  if (const auto* w = winding()) {
    w->validate();
  } else {
    std::get<AnnularCoilIdeal>(coil).validate();
  }
  beam.validate();
  grating.validate();
  if (!std::isfinite(current)) throw DomainError("current must be finite");
  if (!(geometry_factor > 0.0)) throw DomainError("geometry factor must be positive");
}

ExperimentScenario reference_scenario() {
  ExperimentScenario s{
      .coil = CoilWindingSpec{.inner_radius = 0.1,
                              .outer_radius = 0.12,
                              .length = 12.0,
                              .turn_density = 2000.0,
                              .helicity = {+1, -1},
                              .wire_diameter = 1e-3,
                              .current = 0.0},
      .beam = BeamSpec{.voltage = 30e3, .beam_width = 1e-3},
      .grating = GratingScreenSpec{.spacing = 2.55e-10, .screen_distance = 0.1},
      .current = 0.0,
  };
  return s;
}

namespace {

// Reads objects while tracking the dotted path for error messages and
// rejecting keys that were never consumed.
class Reader {
 public:
  Reader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) throw ConfigError(where() + ": expected an object");
  }

  bool has(const std::string& key) const { return obj_.contains(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    return obj_.at(key);
  }

  std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  // Number (taken as SI) or "<number> <unit>" string checked against `d`.
  void quantity(const std::string& key, Dimension d, double& out) {
    if (!has(key)) return;
    const json& v = raw(key);
    try {
      if (v.is_number()) {
        out = v.get<double>();
      } else if (v.is_string()) {
        out = parse_si(v.get<std::string>(), d);
      } else {
        throw ConfigError("expected a number or a quantity string");
      }
    } catch (const Error& e) {
      throw ConfigError(field(key) + ": " + e.what());
    }
  }

  void integer(const std::string& key, int& out) {
    if (!has(key)) return;
    const json& v = raw(key);
    if (!v.is_number_integer()) throw ConfigError(field(key) + ": expected an integer");
    out = v.get<int>();
  }

  std::string text(const std::string& key, const std::string& fallback) {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_string()) throw ConfigError(field(key) + ": expected a string");
    return v.get<std::string>();
  }

  void finish() const {
    for (const auto& [key, _] : obj_.items()) {
      if (!seen_.count(key)) throw ConfigError(field(key) + ": unknown key");
    }
  }

  std::string where() const { return path_.empty() ? "scenario" : path_; }

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

CoilModel read_coil(Reader& r, const CoilWindingSpec& defaults) {
  const std::string type = r.text("type", "winding");
  CoilWindingSpec w = defaults;
  r.quantity("R1", dim::length, w.inner_radius);
  r.quantity("R2", dim::length, w.outer_radius);
  r.quantity("turn_density", dim::inverse_length, w.turn_density);

  if (type == "ideal") {
    int turns = 0;
    r.integer("turns", turns);
    r.finish();
    AnnularCoilIdeal c{w.inner_radius, w.outer_radius, 0, 0.0};
    if (turns == 0) {
      try {
        turns = turns_from_density(w.inner_radius, w.turn_density);
      } catch (const Error& e) {
        throw ConfigError(r.where() + ": " + e.what());
      }
    }
    c.turns = turns;
    return c;
  }
  if (type != "winding") {
    throw ConfigError(r.field("type") + ": expected \"winding\" or \"ideal\", got \"" + type + "\"");
  }
  r.quantity("length", dim::length, w.length);
  r.quantity("wire_diameter", dim::length, w.wire_diameter);
  if (r.has("helicity")) {
    const json& h = r.raw("helicity");
    if (!h.is_array() || h.empty()) throw ConfigError(r.field("helicity") + ": expected a non-empty array");
    w.helicity.clear();
    for (const auto& v : h) {
      if (!v.is_number_integer()) throw ConfigError(r.field("helicity") + ": entries must be integers");
      w.helicity.push_back(v.get<int>());
    }
  }
  if (r.has("layers")) {
    int layers = 0;
    r.integer("layers", layers);
    if (layers < 1) throw ConfigError(r.field("layers") + ": must be positive");
    if (!r.has("helicity")) {
      // Alternate helicity between adjacent layers.
      w.helicity.clear();
      for (int l = 0; l < layers; ++l) w.helicity.push_back(l % 2 == 0 ? +1 : -1);
    } else if (layers != static_cast<int>(w.helicity.size())) {
      throw ConfigError(r.field("layers") + ": does not match the length of helicity");
    }
  }
  r.finish();
  return w;
}

}  // namespace

ExperimentScenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    std::ostringstream os;
    os << "scenario parse error at line " << line_of(text, e.byte) << ": " << e.what();
    throw ConfigError(os.str());
  }

  ExperimentScenario s = reference_scenario();
  Reader top(doc, "");
  if (!top.has("schema")) throw ConfigError("schema: missing (expected \"" + std::string(kScenarioSchema) + "\")");
  const std::string schema = top.text("schema", "");
  if (schema != kScenarioSchema) {
    throw ConfigError("schema: unsupported version \"" + schema + "\", expected \"" + kScenarioSchema + "\"");
  }

  if (top.has("coil")) {
    Reader r(top.raw("coil"), "coil");
    s.coil = read_coil(r, std::get<CoilWindingSpec>(s.coil));
  }
  if (top.has("beam")) {
    Reader r(top.raw("beam"), "beam");
    r.quantity("voltage", dim::voltage, s.beam.voltage);
    r.quantity("width", dim::length, s.beam.beam_width);
    if (r.has("axis")) {
      const json& a = r.raw("axis");
      if (!a.is_array() || a.size() != 3 || !a[0].is_number() || !a[1].is_number() || !a[2].is_number()) {
        throw ConfigError(r.field("axis") + ": expected [x, y, z]");
      }
      s.beam.axis = {a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
    }
    r.finish();
  }
  if (top.has("grating")) {
    Reader r(top.raw("grating"), "grating");
    r.quantity("spacing", dim::length, s.grating.spacing);
    r.quantity("screen_distance", dim::length, s.grating.screen_distance);
    r.finish();
  }
  top.quantity("current", dim::current, s.current);
  if (top.has("geometry_factor")) {
    const json& g = top.raw("geometry_factor");
    if (!g.is_number()) throw ConfigError("geometry_factor: expected a number");
    s.geometry_factor = g.get<double>();
  }
  top.finish();

  s.set_current(s.current);

  try {
    s.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("invalid scenario: ") + e.what());
  }
  return s;
}

ExperimentScenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::filesystem::path resolve_config_path(const std::string& arg) {
  namespace fs = std::filesystem;
  const char* env = std::getenv(kConfigDirEnv);
  if (arg.empty()) {
    if (env && *env) {
      fs::path candidate = fs::path(env) / "default.json";
      if (fs::exists(candidate)) return candidate;
    }
    return {};
  }
  fs::path p(arg);
  if (fs::exists(p) || p.is_absolute() || !env || !*env) return p;
  fs::path candidate = fs::path(env) / p;
  return fs::exists(candidate) ? candidate : p;
}

json scenario_to_json(const ExperimentScenario& s) {
  json coil;
  if (const auto* w = s.winding()) {
    coil = {{"type", "winding"},      {"R1", w->inner_radius},
            {"R2", w->outer_radius},  {"length", w->length},
            {"turn_density", w->turn_density},
            {"helicity", w->helicity}, {"wire_diameter", w->wire_diameter}};
  } else {
    const auto& c = std::get<AnnularCoilIdeal>(s.coil);
    coil = {{"type", "ideal"}, {"R1", c.inner_radius}, {"R2", c.outer_radius}, {"turns", c.turns}};
  }
  return {
      {"schema", kScenarioSchema},
      {"coil", coil},
      {"beam",
       {{"voltage", s.beam.voltage},
        {"width", s.beam.beam_width},
        {"axis", {s.beam.axis.x, s.beam.axis.y, s.beam.axis.z}}}},
      {"grating", {{"spacing", s.grating.spacing}, {"screen_distance", s.grating.screen_distance}}},
      {"current", s.current},
      {"geometry_factor", s.geometry_factor},
  };
}

}  // namespace hafield
