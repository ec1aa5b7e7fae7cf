#include <algorithm>
#include <vector>

#include "capflow/kernels.hpp"
#include "kernels_detail.hpp"

namespace capflow::kernels {

double element_sum_chunked(const RadiusProfile& profile, std::size_t n_elements,
                           RadiusAveraging averaging) {
    const std::size_t n_chunks = (n_elements + kChunkSize - 1) / kChunkSize;
    if (n_chunks <= 1) return detail::block_sum(profile, n_elements, 0, n_elements, averaging);

    std::vector<double> partial(n_chunks, 0.0);
    const auto chunks = static_cast<long long>(n_chunks);
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < chunks; ++c) {
        const auto first = static_cast<std::size_t>(c) * kChunkSize;
        const std::size_t last = std::min(first + kChunkSize, n_elements);
        partial[static_cast<std::size_t>(c)] =
            detail::block_sum(profile, n_elements, first, last, averaging);
    }

    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

}  // namespace capflow::kernels
