#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hafield/errors.hpp"
#include "hafield/scenario.hpp"

namespace hafield {
namespace {

namespace fs = std::filesystem;

std::string config_error(std::string_view text) {
  try {
    parse_scenario(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

TEST(Scenario, DefaultsAreConsistent) {
  const auto s = reference_scenario();
  ASSERT_NE(s.winding(), nullptr);
  EXPECT_EQ(s.winding()->turn_count(), 1257);
  EXPECT_EQ(s.ideal_coil().turns, 1257);
  EXPECT_NEAR(s.coil_constant(), 4.583563940295200e-5, 1e-18);
  EXPECT_NO_THROW(s.validate());
  EXPECT_TRUE(s.geometry_checks().all_ok());
}

TEST(Scenario, MinimalDocumentGivesDefaults) {
  const auto s = parse_scenario(R"({"schema": "hafield-scenario/1"})");
  const auto d = reference_scenario();
  EXPECT_EQ(scenario_to_json(s), scenario_to_json(d));
  EXPECT_EQ(s.current, 0.0);
}

TEST(Scenario, QuantitiesWithUnits) {
  const auto s = parse_scenario(R"({
    "schema": "hafield-scenario/1",
    // comments are allowed
    "coil": {"R1": "10 cm", "R2": "120 mm", "length": "12 m", "turn_density": "2000 1/m"},
    "beam": {"voltage": "30 kV", "width": "1 mm"},
    "grating": {"spacing": "0.255 nm", "screen_distance": 0.1},
    "current": "-2.5 A"
  })");
  EXPECT_DOUBLE_EQ(s.inner_radius(), 0.1);
  EXPECT_DOUBLE_EQ(s.winding()->outer_radius, 0.12);
  EXPECT_DOUBLE_EQ(s.beam.voltage, 30e3);
  EXPECT_DOUBLE_EQ(s.grating.spacing, 2.55e-10);
  EXPECT_DOUBLE_EQ(s.current, -2.5);
  EXPECT_DOUBLE_EQ(s.winding()->current, -2.5);
}

TEST(Scenario, IdealCoil) {
  const auto s = parse_scenario(R"({"schema": "hafield-scenario/1",
    "coil": {"type": "ideal", "R1": 0.1, "R2": 0.12, "turn_density": 2000}, "current": 3})");
  EXPECT_EQ(s.winding(), nullptr);
  const auto& c = std::get<AnnularCoilIdeal>(s.coil);
  EXPECT_EQ(c.turns, 1257);
  EXPECT_EQ(c.current, 3.0);
  EXPECT_TRUE(std::isinf(s.geometry_checks().length_over_d));

  const auto t = parse_scenario(R"({"schema": "hafield-scenario/1",
    "coil": {"type": "ideal", "turns": 100}})");
  EXPECT_EQ(std::get<AnnularCoilIdeal>(t.coil).turns, 100);
}

TEST(Scenario, LayersAlternateHelicity) {
  const auto s = parse_scenario(R"({"schema": "hafield-scenario/1",
    "coil": {"layers": 4, "wire_diameter": "0.5 mm"}})");
  EXPECT_EQ(s.winding()->helicity, (std::vector<int>{1, -1, 1, -1}));
  EXPECT_NE(config_error(R"({"schema": "hafield-scenario/1",
    "coil": {"layers": 3, "helicity": [1, -1]}})").find("coil.layers"), std::string::npos);
}

TEST(Scenario, RoundTrip) {
  auto s = reference_scenario();
  s.current = 7.0;
  s.beam.voltage = 12e3;
  const auto back = parse_scenario(scenario_to_json(s).dump());
  EXPECT_EQ(scenario_to_json(back), scenario_to_json(s));
}

TEST(Scenario, RadiiOutOfOrderNamesInvariant) {
  const auto msg = config_error(R"({"schema": "hafield-scenario/1", "coil": {"R1": 0.12, "R2": 0.1}})");
  EXPECT_NE(msg.find("R1 < R2"), std::string::npos) << msg;
}

TEST(Scenario, InfeasibleWindingIsGeometryConfigError) {
  const auto msg = config_error(R"({"schema": "hafield-scenario/1",
    "coil": {"helicity": [1], "wire_diameter": "1 mm"}})");
  EXPECT_NE(msg.find("overlap"), std::string::npos) << msg;
}

TEST(Scenario, UnknownKeyIsReportedWithPath) {
  EXPECT_NE(config_error(R"({"schema": "hafield-scenario/1", "beam": {"voltag": 1}})").find("beam.voltag"),
            std::string::npos);
  EXPECT_NE(config_error(R"({"schema": "hafield-scenario/1", "extra": 1})").find("extra"), std::string::npos);
}

TEST(Scenario, WrongDimensionIsRejected) {
  const auto msg = config_error(R"({"schema": "hafield-scenario/1", "beam": {"voltage": "30 A"}})");
  EXPECT_NE(msg.find("beam.voltage"), std::string::npos) << msg;
  EXPECT_FALSE(config_error(R"({"schema": "hafield-scenario/1", "current": "2 furlong"})").empty());
  EXPECT_FALSE(config_error(R"({"schema": "hafield-scenario/1", "current": true})").empty());
}

TEST(Scenario, ParseErrorGivesLine) {
  const auto msg = config_error("{\n  \"schema\": \"hafield-scenario/1\",\n  \"current\": ,\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(Scenario, SchemaIsRequired) {
  EXPECT_NE(config_error(R"({"current": 1})").find("schema"), std::string::npos);
  EXPECT_NE(config_error(R"({"schema": "hafield-scenario/9"})").find("unsupported"), std::string::npos);
}

TEST(Scenario, CoilTypeIsChecked) {
  EXPECT_NE(config_error(R"({"schema": "hafield-scenario/1", "coil": {"type": "toroid"}})").find("coil.type"),
            std::string::npos);
  EXPECT_FALSE(config_error(R"({"schema": "hafield-scenario/1", "coil": {"helicity": [2, -1]}})").empty());
  EXPECT_FALSE(config_error(R"({"schema": "hafield-scenario/1", "beam": {"axis": [1, 0, 1]}})").empty());
}

class ConfigDirTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("hafield_cfg_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    std::ofstream(dir_ / "custom.json") << R"({"schema": "hafield-scenario/1", "current": 4})";
  }
  void TearDown() override {
    ::unsetenv(kConfigDirEnv);
    fs::remove_all(dir_);
  }
  fs::path dir_;
};

TEST_F(ConfigDirTest, RelativePathSearchesEnvironmentDirectory) {
  ::setenv(kConfigDirEnv, dir_.c_str(), 1);
  const auto p = resolve_config_path("custom.json");
  EXPECT_EQ(p, dir_ / "custom.json");
  EXPECT_EQ(load_scenario(p).current, 4.0);
}

TEST_F(ConfigDirTest, DefaultFileIsOptional) {
  ::setenv(kConfigDirEnv, dir_.c_str(), 1);
  EXPECT_TRUE(resolve_config_path("").empty());
  std::ofstream(dir_ / "default.json") << R"({"schema": "hafield-scenario/1"})";
  EXPECT_EQ(resolve_config_path(""), dir_ / "default.json");
  ::unsetenv(kConfigDirEnv);
  EXPECT_TRUE(resolve_config_path("").empty());
}

TEST_F(ConfigDirTest, MissingFileIsConfigError) {
  EXPECT_THROW(load_scenario(dir_ / "nope.json"), ConfigError);
}

}  // namespace
}  // namespace hafield
