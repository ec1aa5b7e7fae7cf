#pragma once

// Discretized-tube element sums. Each routine returns
//     sum_i  dx / (pi^2 rbar_i^4)
// over n equal elements on [-L/2, L/2], i.e. an approximation of the integral of 1/A^2.
//
// `serial` is the plain left-to-right reference loop. `chunked` splits the elements into
// fixed-size blocks, sums each block (in parallel under OpenMP), then adds the block sums
// in order. Block boundaries do not depend on the thread count, so the chunked result is
// bit-identical for any number of threads.

#include <cstddef>

#include "capflow/geometry.hpp"

namespace capflow {

enum class RadiusAveraging {
    EndpointMean,  ///< (r(x_i) + r(x_{i+1})) / 2
    Midpoint,      ///< r((x_i + x_{i+1}) / 2)
};

namespace kernels {

inline constexpr std::size_t kChunkSize = 4096;

double element_sum_serial(const RadiusProfile& profile, std::size_t n_elements,
                          RadiusAveraging averaging);

double element_sum_chunked(const RadiusProfile& profile, std::size_t n_elements,
                           RadiusAveraging averaging);

}  // namespace kernels
}  // namespace capflow
