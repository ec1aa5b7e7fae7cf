#pragma once

#include <cstddef>
#include <numbers>

#include "capflow/kernels.hpp"

namespace capflow::kernels::detail {

// Node i of an n-element partition of [-L/2, L/2]. Node n lands on L/2 exactly.
inline double node(double half_length, double length, std::size_t i, std::size_t n) {
    return -half_length + length * (static_cast<double>(i) / static_cast<double>(n));
}

// Sum of element drops for elements [first, last).
inline double block_sum(const RadiusProfile& profile, std::size_t n, std::size_t first,
                        std::size_t last, RadiusAveraging averaging) {
    const double length = profile.geometry().length();
    const double half = 0.5 * length;
    const double dx = length / static_cast<double>(n);
    const double weight = dx / (std::numbers::pi * std::numbers::pi);
    double sum = 0.0;
    double x_left = node(half, length, first, n);
    double r_left = profile(x_left);
    for (std::size_t i = first; i < last; ++i) {
        const double x_right = node(half, length, i + 1, n);
        const double r_right = profile(x_right);
        const double r_bar = averaging == RadiusAveraging::EndpointMean
                                 ? 0.5 * (r_left + r_right)
                                 : profile(0.5 * (x_left + x_right));
        const double r2 = r_bar * r_bar;
        sum += weight / (r2 * r2);
        x_left = x_right;
        r_left = r_right;
    }
    return sum;
}

}  // namespace capflow::kernels::detail
