#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "gridsym/digitize.hpp"

namespace gridsym {

/// 2-D Gaussian: mean and row-major covariance {xx, xy, yx, yy}. The
/// covariance must be symmetric positive-definite.
struct GaussianSpec {
    std::array<double, 2> mean{0.0, 0.0};
    std::array<double, 4> cov{1.0, 0.0, 0.0, 1.0};
};

/// Independent per-axis Gamma draws.
struct GammaSpec {
    double shape_x = 1.0;
    double scale_x = 1.0;
    double shape_y = 1.0;
    double scale_y = 1.0;
};

/// Weighted Gaussian mixture.
struct MixtureSpec {
    std::vector<double> weights;
    std::vector<GaussianSpec> components;
};

/// Circles of points at the given centers; the total point budget is split
/// evenly across rings and angles are drawn uniformly.
struct RingSceneSpec {
    std::vector<Point> centers;
    double radius = 1.0;
};

struct GeneratorSpec {
    std::variant<GaussianSpec, GammaSpec, MixtureSpec, RingSceneSpec> kind;
    std::size_t count = 0;
    double noise_sigma = 0.0;  // isotropic Gaussian jitter, applied last
    std::uint64_t seed = 0;

    void validate() const;
};

/// Draw `count` points per the spec. Identical specs produce bit-identical
/// clouds.
PointCloud generate(const GeneratorSpec& spec);

enum class MirrorAxis { vertical, horizontal };  // the line x = 0 / y = 0

/// Exact reflection across the axis. Involution.
PointCloud reflect(const PointCloud& cloud, MirrorAxis axis);

/// Ground-truth-symmetric scene: points of the base generator restricted to
/// the negative half-plane of the axis, unioned with their exact mirror
/// images.
PointCloud mirror_scene(const GeneratorSpec& base, MirrorAxis axis);

}  // namespace gridsym
