#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "capflow/flow_models.hpp"
#include "capflow/geometry.hpp"

namespace capflow {

inline constexpr std::uint64_t kDefaultSeed = 20111031;

/// One fully specified flow problem.
struct FlowCase {
    CapillaryGeometry geometry;
    FluidProperties fluid;
    MomentumModel model;
    double q;
};

/// Seeded sampler over the randomized-validation parameter box:
///   r_min in [0.1, 5], r_max/r_min in (1 + 1e-6, 20] (log-spaced gap),
///   L in [0.1, 100], alpha in (1, 2], mu in [1e-5, 10], rho in [1, 1e4], Q in [1e-9, 1].
/// Scales spanning decades are drawn log-uniformly. Output depends only on the seed.
class CaseSampler {
public:
    explicit CaseSampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

    FlowCase draw(TubeKind kind);

    /// count draws for each kind in `kinds`, kind-major order.
    template <class Kinds>
    std::vector<FlowCase> draw_many(const Kinds& kinds, std::size_t count) {
        std::vector<FlowCase> out;
        out.reserve(count * std::size(kinds));
        for (TubeKind kind : kinds) {
            for (std::size_t i = 0; i < count; ++i) out.push_back(draw(kind));
        }
        return out;
    }

    /// Uniform double in [0, 1), built from the top 53 bits so it is platform-stable.
    double unit();
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    double log_uniform(double lo, double hi);

private:
    std::mt19937_64 engine_;
};

}  // namespace capflow
