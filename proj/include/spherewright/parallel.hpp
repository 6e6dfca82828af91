#pragma once

namespace spherewright {

/// Worker cap for the OpenMP kernels: omp_get_max_threads() clamped by the
/// SPHEREWRIGHT_THREADS environment variable (read once). 1 without OpenMP.
int thread_count();

}  // namespace spherewright
