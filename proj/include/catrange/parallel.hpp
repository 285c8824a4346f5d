#pragma once

namespace catrange {

// Number of worker threads parallel kernels may use: the OpenMP maximum,
// clamped by the CATALOG_RANGE_THREADS environment variable when set.
// Returns 1 in builds without OpenMP.
int thread_cap();

}  // namespace catrange
