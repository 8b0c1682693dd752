#pragma once

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "hafield/real_coil.hpp"

// Point-set field evaluation. The serial versions are the reference; the
// OpenMP versions split the point loop across threads and produce bitwise
// identical output because each point sums its segments in the same order.

namespace hafield::kernels {

/// Runs body(i) for i in [0, n) across OpenMP threads, each index written
/// by exactly one thread. The first exception is rethrown on the caller.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(hafield_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<Vec3> coil_a_serial(std::span<const SegmentCurrent> segments,
                                std::span<const Vec3> points, double guard = kWireGuard);
std::vector<Vec3> coil_a_parallel(std::span<const SegmentCurrent> segments,
                                  std::span<const Vec3> points, double guard = kWireGuard);

std::vector<Vec3> coil_b_serial(std::span<const SegmentCurrent> segments,
                                std::span<const Vec3> points, double h,
                                double guard = kWireGuard);
std::vector<Vec3> coil_b_parallel(std::span<const SegmentCurrent> segments,
                                  std::span<const Vec3> points, double h,
                                  double guard = kWireGuard);

/// Number of threads OpenMP would use (1 when built without OpenMP).
int max_threads();

}  // namespace hafield::kernels
