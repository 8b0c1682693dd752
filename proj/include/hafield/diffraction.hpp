#pragma once

#include <vector>

#include "hafield/vec3.hpp"

// de Broglie wavelength, grating geometry and fringe spacing of an electron
// beam that crosses a homogeneous vector potential A directed along the beam.

namespace hafield {

struct BeamSpec {
  double voltage;      ///< accelerating voltage U [V]
  double beam_width;   ///< phi [m]
  Vec3 axis{0, 0, 1};  ///< propagation direction (unit vector)

  void validate() const;
};

struct GratingScreenSpec {
  double spacing;          ///< interatomic spacing a [m]
  double screen_distance;  ///< foil-to-screen distance D [m]

  void validate() const;
};

enum class MomentumModel {
  nonrelativistic,  ///< p = sqrt(2 m e U)
  relativistic,     ///< p = sqrt(2 m e U + (e U / c)^2)
};

/// Momentum gained through accelerating voltage U [kg m / s].
double mechanical_momentum(double voltage, MomentumModel model = MomentumModel::nonrelativistic);

/// lambda = h / p.
double de_broglie_lambda(double momentum);

/// P_eff = p_mec + e A for A collinear with the beam. Throws
/// ModelDomainError when P_eff <= 0.
double effective_momentum(double voltage, double vector_potential,
                          MomentumModel model = MomentumModel::nonrelativistic);

/// Same with a vector A, projected onto the beam axis.
double effective_momentum(const BeamSpec& beam, const Vec3& vector_potential,
                          MomentumModel model = MomentumModel::nonrelativistic);

struct FringeOrder {
  int k;
  double theta;          ///< diffraction angle [rad], a sin(theta) = k lambda
  double y;              ///< D tan(theta) [m]
  double ring_radius;    ///< equals y; fringes are concentric rings
  double y_small_angle;  ///< k lambda D / a [m]
};

struct FringePattern {
  std::vector<FringeOrder> orders;  ///< k = 0 .. k_max
  double lambda = 0.0;              ///< effective wavelength [m]
  double p_eff = 0.0;               ///< [kg m / s]
  double interfringe_exact = 0.0;   ///< y_1 - y_0 from arcsin / tan geometry [m]
  double interfringe_small_angle = 0.0;  ///< lambda D / a [m]
  bool small_angle_valid = false;   ///< |tan - sin| / sin < 1e-3 at k = 1
  bool distant_screen_valid = false;  ///< D >= 10 y_kmax
};

/// Ring pattern for orders 0..k_max. Throws OrderLimitError when
/// k_max lambda / a >= 1.
FringePattern fringe_pattern(const BeamSpec& beam, const GratingScreenSpec& gs,
                             double vector_potential, int k_max,
                             MomentumModel model = MomentumModel::nonrelativistic);

/// 1 / i = a (sqrt(2 m e U) + e K I) / (h D), linear in I.
double inverse_interfringe(double voltage, double current, double coil_constant,
                           const GratingScreenSpec& gs,
                           MomentumModel model = MomentumModel::nonrelativistic);

/// Analytic coefficients of 1/i = alpha sqrt(U) + beta I.
double inverse_interfringe_alpha(const GratingScreenSpec& gs);
double inverse_interfringe_beta(double coil_constant, const GratingScreenSpec& gs);

}  // namespace hafield
