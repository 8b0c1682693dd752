#pragma once

#include <array>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hafield/regression.hpp"
#include "hafield/scenario.hpp"

// Drivers behind the command-line subcommands. Each returns a structured
// result and has writers that format it onto a stream, so the CLI only
// handles arguments, files and exit codes.

namespace hafield {

/// Exit-code contract of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitToleranceExceeded = 1, kExitUsage = 2 };

enum class ToleranceProfile {
  paper,   ///< acceptance tolerances of the reproduction
  strict,  ///< 0.1% on every row
};

ToleranceProfile parse_tolerance_profile(const std::string& name);

// ---- reproduce-paper -------------------------------------------------------

struct ReportRow {
  std::string name;
  std::string equation;  ///< Eq1 .. Eq10 tag of the formula that produced it
  std::string unit;
  double computed;
  double published;
  double rel_deviation;
  double tolerance;
  bool flagged;  ///< published value is inconsistent with its own inputs
  bool pass() const { return rel_deviation <= tolerance; }
};

struct ReproductionReport {
  std::vector<ReportRow> rows;
  bool all_pass() const;
};

/// Recomputes every published numerical estimate from the reference scenario.
ReproductionReport reproduce_estimates(ToleranceProfile profile = ToleranceProfile::paper);

void write_report_text(std::ostream& os, const ReproductionReport& rep);
void write_report_csv(std::ostream& os, const ReproductionReport& rep);
nlohmann::json report_json(const ReproductionReport& rep);

// ---- sweep -----------------------------------------------------------------

enum class SweepVariable { current, voltage };

struct SweepSpec {
  SweepVariable variable = SweepVariable::current;
  double from;
  double to;
  double step;

  /// from + i step for i = 0 .. while <= to (with 1e-9 step slack).
  std::vector<double> values() const;
  void validate() const;
};

struct SweepRow {
  double value;  ///< I [A] or U [V]
  bool ok;       ///< false when the model domain was left (P_eff <= 0)
  double p_eff;
  double lambda_eff;
  double interfringe;  ///< small-angle lambda D / a
  double inverse_interfringe;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;
  nlohmann::json fit;  ///< linear response summary
};

SweepResult run_sweep(const ExperimentScenario& scenario, const SweepSpec& spec);
void write_sweep_csv(std::ostream& os, const ExperimentScenario& scenario, const SweepResult& res);

// ---- field-map ------------------------------------------------------------

struct FieldMap {
  std::vector<Vec3> points;
  std::vector<Vec3> a;
  std::vector<Vec3> b;
  HomogeneityReport report;
  std::string solver;  ///< "ideal" or "segments"
};

/// Default region: centred cube of side R1 / 2.
Box default_region(const ExperimentScenario& scenario);

FieldMap field_map(const ExperimentScenario& scenario, const Box& region, std::array<int, 3> grid,
                   int segments_per_turn = 8);
void write_field_map_csv(std::ostream& os, const ExperimentScenario& scenario, const FieldMap& map);
nlohmann::json homogeneity_json(const HomogeneityReport& rep);

// ---- diffract -------------------------------------------------------------

struct DiffractionResult {
  double vector_potential;  ///< K I [T m]
  FringePattern pattern;
};

DiffractionResult diffract(const ExperimentScenario& scenario, int k_max,
                           MomentumModel model = MomentumModel::nonrelativistic);
void write_pattern_csv(std::ostream& os, const ExperimentScenario& scenario,
                       const DiffractionResult& res);
/// {lambda_m, P_eff, interfringe_m, small_angle_valid, ...}
nlohmann::json pattern_summary_json(const DiffractionResult& res);

// ---- validate-coil --------------------------------------------------------

struct CoilValidation {
  GeometryChecks checks;
  int turns;
  double coil_constant;
  std::optional<std::size_t> segment_count;
  std::optional<DiscretizationStudy> discretization;
  std::optional<HomogeneityReport> center;  ///< small cube at the bore centre
};

CoilValidation validate_coil(const ExperimentScenario& scenario);
nlohmann::json coil_validation_json(const CoilValidation& v);

// ---- shared formatting ----------------------------------------------------

/// "# scenario: {...}" comment line used by every CSV writer.
void write_scenario_comment(std::ostream& os, const ExperimentScenario& scenario);

/// Copy of j with every floating value rounded to 9 significant digits.
nlohmann::json rounded(const nlohmann::json& j);

/// JSON text with floats in format_sci notation (non-finite as null).
/// indent < 0 gives a single line.
std::string json_text(const nlohmann::json& j, int indent = 2);

}  // namespace hafield
