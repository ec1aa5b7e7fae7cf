
#include "capflow/kernels.hpp"
#include "kernels_detail.hpp"

namespace capflow::kernels {

double element_sum_serial(const RadiusProfile& profile, std::size_t n_elements,
                          RadiusAveraging averaging) {
    return detail::block_sum(profile, n_elements, 0, n_elements, averaging);
}

}  // namespace capflow::kernels
