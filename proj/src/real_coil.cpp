#include "hafield/real_coil.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hafield/field_kernels.hpp"

namespace hafield {

int CoilWindingSpec::layer_turns(int layer) const {
  const int n = turn_count();
  const int base = n / layers();
  return base + (layer < n % layers() ? 1 : 0);
}

AnnularCoilIdeal CoilWindingSpec::ideal() const {
  return {inner_radius, outer_radius, turn_count(), current};
}

void CoilWindingSpec::validate() const {
  if (!(inner_radius > 0.0) || !(outer_radius > inner_radius)) {
    throw DomainError("coil radii must satisfy 0 < R1 < R2");
  }
  if (!(length > 0.0)) throw DomainError("coil length must be positive");
  if (!(turn_density > 0.0)) throw DomainError("turn density must be positive");
  if (!(wire_diameter > 0.0)) throw DomainError("wire diameter must be positive");
  if (helicity.empty()) throw DomainError("winding needs at least one layer");
  for (int h : helicity) {
    if (h < -1 || h > 1) throw DomainError("helicity entries must be -1, 0 or +1");
  }
  if (!std::isfinite(current)) throw DomainError("coil current must be finite");
  const double fill = wire_diameter * turn_density / layers();
  if (fill > 1.0 + 1e-12) {
    throw GeometryError("turns overlap: wire diameter x turns per metre per layer = " +
                        std::to_string(fill) + " > 1");
  }
  if (turn_count() < layers()) throw GeometryError("fewer turns than layers");
}

std::vector<SegmentCurrent> build_winding(const CoilWindingSpec& spec, int segments_per_turn) {
  spec.validate();
  if (segments_per_turn < 4) throw GeometryError("segments_per_turn must be at least 4");

  const double r1 = spec.inner_radius;
  const double r2 = spec.outer_radius;
  const double half = 0.5 * spec.length;
  const double width = r2 - r1;

  struct Leg {
    double r0, z0, r1, z1, len;
    SegmentRole role;
  };
  const std::array<Leg, 4> legs{{
      {r1, -half, r1, half, spec.length, SegmentRole::inner_run},
      {r1, half, r2, half, width, SegmentRole::end_fragment},
      {r2, half, r2, -half, spec.length, SegmentRole::outer_run},
      {r2, -half, r1, -half, width, SegmentRole::end_fragment},
  }};
  const double perimeter = 2.0 * (spec.length + width);
  std::array<int, 4> pieces{};
  for (int k = 0; k < 4; ++k) pieces[k] = segments_per_turn / 4 + (k < segments_per_turn % 4 ? 1 : 0);

  const int total_turns = spec.turn_count();
  std::vector<SegmentCurrent> out;
  out.reserve(static_cast<std::size_t>(total_turns) * segments_per_turn + spec.layers());
  std::vector<Vec3> layer_starts;

  for (int layer = 0; layer < spec.layers(); ++layer) {
    const int turns = spec.layer_turns(layer);
    const int sign = spec.helicity[layer];
    const double pitch = 2.0 * kPi / turns;
    const double phase = 2.0 * kPi * layer / total_turns;

    // Vertices of the whole layer as one polyline.
    std::vector<Vec3> verts;
    std::vector<SegmentRole> roles;
    verts.reserve(static_cast<std::size_t>(turns) * segments_per_turn + 1);
    for (int j = 0; j < turns; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) {
        const Leg& leg = legs[k];
        for (int q = 0; q < pieces[k]; ++q) {
          const double f = static_cast<double>(q) / pieces[k];
          const double r = leg.r0 + (leg.r1 - leg.r0) * f;
          const double z = leg.z0 + (leg.z1 - leg.z0) * f;
          const double u = sign != 0 ? j + (s + leg.len * f) / perimeter : 0.0;
          const double azimuth = sign != 0 ? phase + sign * pitch * u : phase + pitch * j;
          verts.push_back(from_cylindrical(r, azimuth, z));
          roles.push_back(leg.role);
        }
        s += leg.len;
      }
      if (sign == 0) {
        // Untwisted turn closes on itself.
        const std::size_t first = verts.size() - segments_per_turn;
        for (std::size_t v = first; v < verts.size(); ++v) {
          const Vec3& next = (v + 1 < verts.size()) ? verts[v + 1] : verts[first];
          out.push_back({verts[v], next, spec.current, roles[v]});
        }
      }
    }
    if (sign != 0) {
      // After N_layer turns the helix is back at its start azimuth.
      for (std::size_t v = 0; v < verts.size(); ++v) {
        const Vec3& next = (v + 1 < verts.size()) ? verts[v + 1] : verts.front();
        out.push_back({verts[v], next, spec.current, roles[v]});
      }
    }
    layer_starts.push_back(verts.front());
  }

  if (layer_starts.size() > 1) {
    for (std::size_t l = 0; l < layer_starts.size(); ++l) {
      const Vec3& next = layer_starts[(l + 1) % layer_starts.size()];
      out.push_back({layer_starts[l], next, spec.current, SegmentRole::closure});
    }
  }
  return out;
}

double distance_to_segment(const SegmentCurrent& seg, const Vec3& p) {
  const Vec3 d = seg.end - seg.start;
  const double len2 = dot(d, d);
  double t = len2 > 0.0 ? dot(p - seg.start, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(p - (seg.start + d * t));
}

namespace {

Vec3 segment_a_unchecked(const SegmentCurrent& seg, const Vec3& p) {
  const Vec3 d = seg.end - seg.start;
  const double len = norm(d);
  const double ra = norm(p - seg.start);
  const double rb = norm(p - seg.end);
  const double s = ra + rb;
  const double coef = constants().mu0 * seg.current / (4.0 * kPi) * std::log((s + len) / (s - len)) / len;
  return d * coef;
}

}  // namespace

Vec3 segment_a(const SegmentCurrent& seg, const Vec3& p, double guard) {
  if (seg.start == seg.end) throw DomainError("segment has zero length");
  if (distance_to_segment(seg, p) < guard) {
    throw SingularityError("segment_a: point within wire guard of segment", 0);
  }
  return segment_a_unchecked(seg, p);
}

Vec3 coil_a(std::span<const SegmentCurrent> segments, const Vec3& p, double guard) {
  Vec3 sum;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const SegmentCurrent& seg = segments[i];
    if (seg.start == seg.end) {
      throw DomainError("segment " + std::to_string(i) + " has zero length");
    }
    if (distance_to_segment(seg, p) < guard) {
      throw SingularityError("coil_a: point within wire guard of segment " + std::to_string(i), i);
    }
    sum += segment_a_unchecked(seg, p);
  }
  return sum;
}

Vec3 coil_b(std::span<const SegmentCurrent> segments, const Vec3& p, double h, double guard) {
  return curl_central([&](const Vec3& q) { return coil_a(segments, q, guard); }, p, h);
}

double Box::max_transverse_extent() const {
  const double x = std::max(std::abs(lo.x), std::abs(hi.x));
  const double y = std::max(std::abs(lo.y), std::abs(hi.y));
  return std::hypot(x, y);
}

Box centered_cube(double side) {
  const double h = 0.5 * side;
  return {{-h, -h, -h}, {h, h, h}};
}

std::vector<Vec3> grid_points(const Box& box, std::array<int, 3> grid) {
  for (int g : grid) {
    if (g < 1) throw DomainError("grid needs at least one point per axis");
  }
  auto coord = [](double lo, double hi, int n, int i) {
    return n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (n - 1);
  };
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(grid[0]) * grid[1] * grid[2]);
  for (int k = 0; k < grid[2]; ++k) {
    for (int j = 0; j < grid[1]; ++j) {
      for (int i = 0; i < grid[0]; ++i) {
        pts.push_back({coord(box.lo.x, box.hi.x, grid[0], i), coord(box.lo.y, box.hi.y, grid[1], j),
                       coord(box.lo.z, box.hi.z, grid[2], k)});
      }
    }
  }
  return pts;
}

void check_bore_region(const CoilWindingSpec& spec, const Box& region) {
  if (region.lo.x > region.hi.x || region.lo.y > region.hi.y || region.lo.z > region.hi.z) {
    throw DomainError("region corners are not ordered lo <= hi");
  }
  if (!(region.max_transverse_extent() < spec.inner_radius - kWireGuard)) {
    throw DomainError("region reaches the winding: max transverse extent " +
                      std::to_string(region.max_transverse_extent()) + " m >= R1");
  }
  const double half = 0.5 * spec.length;
  if (!(region.lo.z > -half && region.hi.z < half)) {
    throw DomainError("region extends beyond the coil ends");
  }
}

HomogeneityReport homogeneity_report(const CoilWindingSpec& spec, const Box& region,
                                     std::array<int, 3> grid, HomogeneityOptions opts) {
  spec.validate();
  check_bore_region(spec, region);
  for (int g : grid) {
    if (g < 2) throw DomainError("homogeneity grid needs at least 2 points per axis");
  }
  const double h = opts.fd_step > 0.0 ? opts.fd_step : 1e-4 * spec.inner_radius;

  const auto segments = build_winding(spec, opts.segments_per_turn);
  const auto points = grid_points(region, grid);
  const auto a = opts.parallel ? kernels::coil_a_parallel(segments, points)
                               : kernels::coil_a_serial(segments, points);
  const auto b = opts.parallel ? kernels::coil_b_parallel(segments, points, h)
                               : kernels::coil_b_serial(segments, points, h);

  HomogeneityReport rep = summarize_samples(region, grid, a, b, annular_coil_a(spec.ideal()));
  rep.segment_count = segments.size();
  return rep;
}

HomogeneityReport summarize_samples(const Box& region, std::array<int, 3> grid,
                                    std::span<const Vec3> a, std::span<const Vec3> b,
                                    double ideal_a) {
  if (a.empty() || a.size() != b.size()) throw DomainError("sample arrays must be non-empty and equal");
  HomogeneityReport rep;
  rep.region = region;
  rep.grid = grid;
  for (const Vec3& v : a) rep.mean_a += v;
  rep.mean_a = rep.mean_a / static_cast<double>(a.size());
  rep.ideal_a = ideal_a;

  auto ratio = [](double num, double den) {
    if (den != 0.0) return num / den;
    return num == 0.0 ? 0.0 : HUGE_VAL;
  };
  const double mean_norm = norm(rep.mean_a);
  const Vec3 ideal_vec{0.0, 0.0, ideal_a};
  for (std::size_t i = 0; i < a.size(); ++i) {
    rep.max_rel_deviation = std::max(rep.max_rel_deviation, ratio(norm(a[i] - rep.mean_a), mean_norm));
    rep.rel_error_vs_ideal =
        std::max(rep.rel_error_vs_ideal, ratio(norm(a[i] - ideal_vec), std::abs(ideal_a)));
    rep.max_b_magnitude = std::max(rep.max_b_magnitude, norm(b[i]));
  }
  return rep;
}

DiscretizationStudy converge_segments_per_turn(const CoilWindingSpec& spec,
                                               std::span<const Vec3> probes, int initial,
                                               double rel_change, int max_segments) {
  if (probes.empty()) throw DomainError("discretization study needs probe points");
  int spt = initial;
  auto prev = kernels::coil_a_parallel(build_winding(spec, spt), probes);
  DiscretizationStudy study{spt, HUGE_VAL, false};
  while (spt * 2 <= max_segments) {
    spt *= 2;
    auto next = kernels::coil_a_parallel(build_winding(spec, spt), probes);
    double change = 0.0;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const double scale = norm(next[i]);
      change = std::max(change, scale > 0.0 ? norm(next[i] - prev[i]) / scale : 0.0);
    }
    study = {spt, change, change < rel_change};
    if (study.converged) break;
    prev = std::move(next);
  }
  return study;
}

}  // namespace hafield
