#pragma once

#include <numbers>

namespace hafield {

/// Physical constants in SI units (SI-2019 exact values for h and e,
/// CODATA 2018 for m_e and mu0).
struct PhysicalConstants {
  double h;    ///< Planck constant [J s]
  double e;    ///< elementary charge [C]
  double m_e;  ///< electron mass [kg]
  double mu0;  ///< vacuum permeability [T m / A]
};

inline constexpr PhysicalConstants kSI{
    .h = 6.62607015e-34,
    .e = 1.602176634e-19,
    .m_e = 9.1093837015e-31,
    .mu0 = 1.25663706212e-6,
};

/// Speed of light [m/s], used only by the optional relativistic momentum.
inline constexpr double kSpeedOfLight = 299792458.0;

inline constexpr double kPi = std::numbers::pi;

constexpr PhysicalConstants constants() noexcept { return kSI; }

}  // namespace hafield
