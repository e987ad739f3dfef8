#include "gridsym/synth.hpp"

#include <cmath>
#include <numbers>

#include "gridsym/errors.hpp"
#include "gridsym/rng.hpp"

namespace gridsym {

namespace {

struct Cholesky2 {
    double l00, l10, l11;
};

Cholesky2 cholesky(const std::array<double, 4>& cov) {
    const double a = cov[0], b = cov[1], bt = cov[2], d = cov[3];
    if (b != bt) throw ParameterError("covariance must be symmetric");
    if (!(a > 0.0) || !(a * d - b * b > 0.0))
        throw ParameterError("covariance must be positive-definite");
    const double l00 = std::sqrt(a);
    const double l10 = b / l00;
    return {l00, l10, std::sqrt(d - l10 * l10)};
}

void validate_gaussian(const GaussianSpec& g) { cholesky(g.cov); }

void validate_gamma(const GammaSpec& g) {
    if (!(g.shape_x > 0.0) || !(g.scale_x > 0.0) || !(g.shape_y > 0.0) || !(g.scale_y > 0.0))
        throw ParameterError("gamma shape and scale must be positive");
}

void validate_mixture(const MixtureSpec& m) {
    if (m.weights.size() != m.components.size() || m.components.empty())
        throw ParameterError("mixture needs matching, nonempty weights and components");
    double total = 0.0;
    for (double w : m.weights) {
        if (!(w >= 0.0)) throw ParameterError("mixture weights must be nonnegative");
        total += w;
    }
    if (!(total > 0.0)) throw ParameterError("mixture weights must not all be zero");
    for (const auto& c : m.components) validate_gaussian(c);
}

void validate_rings(const RingSceneSpec& r) {
    if (r.centers.empty()) throw ParameterError("ring scene needs at least one center");
    if (!(r.radius > 0.0)) throw ParameterError("ring radius must be positive");
}

Point draw_gaussian(const GaussianSpec& g, Rng& rng) {
    // Fresh distribution per draw: normal_distribution caches a spare
    // variate, and a shared instance would entangle unrelated streams.
    std::normal_distribution<double> unit(0.0, 1.0);
    const auto chol = cholesky(g.cov);
    const double z0 = unit(rng);
    const double z1 = unit(rng);
    return {g.mean[0] + chol.l00 * z0, g.mean[1] + chol.l10 * z0 + chol.l11 * z1};
}

}  // namespace

void GeneratorSpec::validate() const {
    if (noise_sigma < 0.0) throw ParameterError("noise sigma must be nonnegative");
    std::visit(
        [](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, GaussianSpec>) validate_gaussian(k);
            else if constexpr (std::is_same_v<T, GammaSpec>) validate_gamma(k);
            else if constexpr (std::is_same_v<T, MixtureSpec>) validate_mixture(k);
            else validate_rings(k);
        },
        kind);
}

PointCloud generate(const GeneratorSpec& spec) {
    spec.validate();
    Rng rng = make_stream(spec.seed);
    PointCloud cloud;
    cloud.points.reserve(spec.count);

    if (const auto* g = std::get_if<GaussianSpec>(&spec.kind)) {
        for (std::size_t i = 0; i < spec.count; ++i) cloud.points.push_back(draw_gaussian(*g, rng));
    } else if (const auto* gm = std::get_if<GammaSpec>(&spec.kind)) {
        std::gamma_distribution<double> gx(gm->shape_x, gm->scale_x);
        std::gamma_distribution<double> gy(gm->shape_y, gm->scale_y);
        for (std::size_t i = 0; i < spec.count; ++i) {
            const double x = gx(rng);
            const double y = gy(rng);
            cloud.points.push_back({x, y});
        }
    } else if (const auto* mix = std::get_if<MixtureSpec>(&spec.kind)) {
        std::discrete_distribution<int> pick(mix->weights.begin(), mix->weights.end());
        for (std::size_t i = 0; i < spec.count; ++i)
            cloud.points.push_back(draw_gaussian(mix->components[pick(rng)], rng));
    } else {
        const auto& rs = std::get<RingSceneSpec>(spec.kind);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        const std::size_t rings = rs.centers.size();
        for (std::size_t i = 0; i < spec.count; ++i) {
            const Point& center = rs.centers[i % rings];
            const double a = angle(rng);
            cloud.points.push_back(
                {center.x + rs.radius * std::cos(a), center.y + rs.radius * std::sin(a)});
        }
    }

    if (spec.noise_sigma > 0.0) {
        std::normal_distribution<double> jitter(0.0, spec.noise_sigma);
        for (auto& p : cloud.points) {
            p.x += jitter(rng);
            p.y += jitter(rng);
        }
    }
    return cloud;
}

PointCloud reflect(const PointCloud& cloud, MirrorAxis axis) {
    PointCloud out;
    out.points.reserve(cloud.points.size());
    for (const auto& p : cloud.points)
        out.points.push_back(axis == MirrorAxis::vertical ? Point{-p.x, p.y} : Point{p.x, -p.y});
    return out;
}

PointCloud mirror_scene(const GeneratorSpec& base, MirrorAxis axis) {
    const PointCloud raw = generate(base);
    PointCloud half;
    for (const auto& p : raw.points) {
        const double side = axis == MirrorAxis::vertical ? p.x : p.y;
        if (side < 0.0) half.points.push_back(p);
    }
    PointCloud mirrored = reflect(half, axis);
    half.points.insert(half.points.end(), mirrored.points.begin(), mirrored.points.end());
    return half;
}

}  // namespace gridsym
