#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "hafield/ideal_field.hpp"
#include "hafield/vec3.hpp"

namespace hafield {

/// Points closer than this to a segment are treated as on the wire [m].
inline constexpr double kWireGuard = 1e-9;

/// Finite toroidal winding of rectangular section: axial runs at R1 and R2
/// joined by radial end fragments at z = +-L/2, centred on the origin.
struct CoilWindingSpec {
  double inner_radius;       ///< R1 [m]
  double outer_radius;       ///< R2 [m]
  double length;             ///< L [m]
  double turn_density;       ///< wires per metre of inner circumference, all layers
  std::vector<int> helicity; ///< one entry per layer: +1, -1, or 0 (untwisted loops)
  double wire_diameter;      ///< [m]
  double current;            ///< I [A]

  int layers() const { return static_cast<int>(helicity.size()); }
  /// N = round(2 pi R1 n), summed over all layers.
  int turn_count() const { return turns_from_density(inner_radius, turn_density); }
  /// Turns assigned to `layer`; the remainder of N / layers goes to the first layers.
  int layer_turns(int layer) const;
  /// Infinite-length coil with the same radii, turns and current.
  AnnularCoilIdeal ideal() const;

  void validate() const;
};

enum class SegmentRole { inner_run, outer_run, end_fragment, closure };

struct SegmentCurrent {
  Vec3 start;
  Vec3 end;
  double current;
  SegmentRole role = SegmentRole::inner_run;
};

/// Polyline of straight segments following the winding. Each turn advances
/// in azimuth by sign * 2 pi / N_layer spread uniformly along its path, so a
/// helical layer closes on itself after N_layer turns. Layers share the
/// radii R1, R2 and are staggered in azimuth by 2 pi / N. With more than one
/// layer, closure segments chain the layer start points into a loop.
std::vector<SegmentCurrent> build_winding(const CoilWindingSpec& spec, int segments_per_turn);

/// Closed-form vector potential of a straight segment,
/// mu0 I / (4 pi) * u * ln((Ra + Rb + l) / (Ra + Rb - l)).
Vec3 segment_a(const SegmentCurrent& seg, const Vec3& p, double guard = kWireGuard);

/// Distance from p to the closed segment.
double distance_to_segment(const SegmentCurrent& seg, const Vec3& p);

/// Sum of segment_a. A SingularityError carries the offending segment index.
Vec3 coil_a(std::span<const SegmentCurrent> segments, const Vec3& p, double guard = kWireGuard);

/// Central-difference curl of an arbitrary field f: Vec3 -> Vec3.
template <class Field>
Vec3 curl_central(const Field& f, const Vec3& p, double h) {
  if (!(h > 0.0)) throw DomainError("curl step must be positive");
  const Vec3 ex{h, 0, 0}, ey{0, h, 0}, ez{0, 0, h};
  const Vec3 dx = (f(p + ex) - f(p - ex)) / (2.0 * h);
  const Vec3 dy = (f(p + ey) - f(p - ey)) / (2.0 * h);
  const Vec3 dz = (f(p + ez) - f(p - ez)) / (2.0 * h);
  return {dy.z - dz.y, dz.x - dx.z, dx.y - dy.x};
}

/// B = curl A by central differences with step h (default 1e-4 R1 at the
/// call sites that know R1).
Vec3 coil_b(std::span<const SegmentCurrent> segments, const Vec3& p, double h,
            double guard = kWireGuard);

struct Box {
  Vec3 lo;
  Vec3 hi;

  Vec3 center() const { return (lo + hi) * 0.5; }
  /// Largest distance from the z axis reached by the box.
  double max_transverse_extent() const;
};

/// Cube of the given side centred on the origin.
Box centered_cube(double side);

/// Row-major (x fastest) sample points of a box, `grid` points per axis.
std::vector<Vec3> grid_points(const Box& box, std::array<int, 3> grid);

struct HomogeneityReport {
  Box region;
  std::array<int, 3> grid{};
  Vec3 mean_a;
  double max_rel_deviation = 0.0;  ///< max |A - mean| / |mean|
  double max_b_magnitude = 0.0;    ///< [T]
  double ideal_a = 0.0;            ///< K I of the matching ideal coil [T m]
  double rel_error_vs_ideal = 0.0; ///< max |A - ideal z| / |ideal|
  std::size_t segment_count = 0;
};

struct HomogeneityOptions {
  int segments_per_turn = 8;
  double fd_step = 0.0;  ///< 0 selects 1e-4 R1
  bool parallel = true;
};

/// Reduces sampled A and B (one entry per grid point) to a report.
HomogeneityReport summarize_samples(const Box& region, std::array<int, 3> grid,
                                    std::span<const Vec3> a, std::span<const Vec3> b,
                                    double ideal_a);

/// Samples the winding's A and B on a grid inside the bore.
HomogeneityReport homogeneity_report(const CoilWindingSpec& spec, const Box& region,
                                     std::array<int, 3> grid, HomogeneityOptions opts = {});

/// Checks the region lies strictly inside the bore and between the coil ends.
void check_bore_region(const CoilWindingSpec& spec, const Box& region);

struct DiscretizationStudy {
  int segments_per_turn;  ///< last refinement evaluated
  double last_rel_change; ///< max change at the probes for that refinement
  bool converged;
};

/// Doubles segments_per_turn from `initial` until coil_a at every probe
/// changes by less than `rel_change` (relative to |A|).
DiscretizationStudy converge_segments_per_turn(const CoilWindingSpec& spec,
                                               std::span<const Vec3> probes, int initial = 8,
                                               double rel_change = 1e-3, int max_segments = 256);

}  // namespace hafield
