#pragma once

#include <filesystem>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>
#include <variant>

#include "hafield/diffraction.hpp"
#include "hafield/ideal_field.hpp"
#include "hafield/real_coil.hpp"

namespace hafield {

inline constexpr const char* kScenarioSchema = "hafield-scenario/1";

/// Environment variable naming a directory searched for relative
/// --config paths and for default.json when no config is given.
inline constexpr const char* kConfigDirEnv = "HAFIELD_CONFIG_DIR";

using CoilModel = std::variant<CoilWindingSpec, AnnularCoilIdeal>;

/// Ratios behind the setup's "much greater than" conditions.
struct GeometryChecks {
  double factor;          ///< threshold for every ratio
  double length_over_d;   ///< L / D (infinite for the ideal coil)
  double d_over_width;    ///< D / phi
  double width_over_a;    ///< phi / a

  bool length_ok() const { return length_over_d >= factor; }
  bool screen_ok() const { return d_over_width >= factor; }
  bool beam_ok() const { return width_over_a >= factor; }
  bool all_ok() const { return length_ok() && screen_ok() && beam_ok(); }
};

struct ExperimentScenario {
  CoilModel coil;
  BeamSpec beam;
  GratingScreenSpec grating;
  double current = 0.0;           ///< I [A]
  double geometry_factor = 10.0;  ///< threshold for GeometryChecks

  /// Sets the operating current on the scenario and its coil.
  void set_current(double amperes);

  const CoilWindingSpec* winding() const { return std::get_if<CoilWindingSpec>(&coil); }
  /// Infinite-length coil equivalent to `coil`, carrying `current`.
  AnnularCoilIdeal ideal_coil() const;
  double coil_constant() const;
  double inner_radius() const;
  GeometryChecks geometry_checks() const;

  /// Throws DomainError/GeometryError naming the violated invariant.
  void validate() const;
};

/// Values used in the numerical estimates: a = 2.55e-10 m, D = 0.1 m,
/// U = 30 kV, R1 = 0.1 m, R2 = 0.12 m, n = 2000 /m in two layers of 1 mm
/// wire with opposite helicity, L = 12 m (L / R2 = 100), phi = 1 mm, I = 0.
ExperimentScenario reference_scenario();

/// Parses a scenario document. Omitted fields take reference_scenario()
/// values; unknown keys and bad units are ConfigError.
ExperimentScenario parse_scenario(std::string_view text);

ExperimentScenario load_scenario(const std::filesystem::path& path);

/// Resolves a --config argument (empty = none) against kConfigDirEnv.
/// Returns an empty path when the reference defaults should be used.
std::filesystem::path resolve_config_path(const std::string& arg);

/// Canonical JSON echo of a scenario (SI numbers).
nlohmann::json scenario_to_json(const ExperimentScenario& s);

}  // namespace hafield
