#include "hafield/field_kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hafield::kernels {

std::vector<Vec3> coil_a_serial(std::span<const SegmentCurrent> segments,
                                std::span<const Vec3> points, double guard) {
  std::vector<Vec3> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = coil_a(segments, points[i], guard);
  return out;
}

std::vector<Vec3> coil_a_parallel(std::span<const SegmentCurrent> segments,
                                  std::span<const Vec3> points, double guard) {
  std::vector<Vec3> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) { out[i] = coil_a(segments, points[i], guard); });
  return out;
}

std::vector<Vec3> coil_b_serial(std::span<const SegmentCurrent> segments,
                                std::span<const Vec3> points, double h, double guard) {
  std::vector<Vec3> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = coil_b(segments, points[i], h, guard);
  return out;
}

std::vector<Vec3> coil_b_parallel(std::span<const SegmentCurrent> segments,
                                  std::span<const Vec3> points, double h, double guard) {
  std::vector<Vec3> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) { out[i] = coil_b(segments, points[i], h, guard); });
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace hafield::kernels
