#include "hyperlsh/dimreduce.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperlsh {

ProjectionMap gaussian_projection(std::size_t source_dim, std::size_t target_dim, double scale, Rng& rng) {
    if (source_dim == 0 || target_dim == 0)
        throw std::invalid_argument("gaussian_projection: dimensions must be positive");
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw std::domain_error("gaussian_projection: scale must be finite and positive");
    ProjectionMap map;
    map.source_dim = source_dim;
    map.target_dim = target_dim;
    map.scale = scale;
    map.weights.resize(source_dim * target_dim);
    for (double& w : map.weights) w = rng.normal();
    return map;
}

HalfSpacePoint project_point(const ProjectionMap& map, const HalfSpacePoint& p) {
    validate_point(p);
    if (p.x.size() != map.source_dim) throw std::invalid_argument("project_point: dimension mismatch");
    HalfSpacePoint out;
    out.z = p.z;
    out.x.resize(map.target_dim);
    for (std::size_t i = 0; i < map.target_dim; ++i) {
        const double* row = map.weights.data() + i * map.source_dim;
        double s = 0.0;
        for (std::size_t j = 0; j < map.source_dim; ++j) s += row[j] * p.x[j];
        out.x[i] = map.scale * s;
    }
    return out;
}

double big_f(double z1, double z2, double s) {
    if (!(z1 > 0.0) || !(z2 > 0.0)) throw std::domain_error("big_f: heights must be positive");
    if (!(s >= 0.0)) throw std::domain_error("big_f: s must be nonnegative");
    double dz = z1 - z2;
    return stable_arccosh1p((s * s + dz * dz) / (2.0 * z1 * z2));
}

bool check_f_stretch(double z1, double z2, double s, double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("check_f_stretch: gamma must be positive");
    double lhs = big_f(z1, z2, gamma * s);
    double rhs = gamma * big_f(z1, z2, s);
    double slack = 1e-12 * std::max(1.0, std::max(std::fabs(lhs), std::fabs(rhs)));
    return gamma >= 1.0 ? lhs <= rhs + slack : lhs + slack >= rhs;
}

double alpha_constant() {
    return std::sqrt(2.0 / std::numbers::pi) * (1.0 - std::exp(-0.5)) + std::erfc(1.0 / std::sqrt(2.0));
}

std::pair<ProjectionMap, std::vector<HalfSpacePoint>> jl_transform(
    const std::vector<HalfSpacePoint>& points, double epsilon, Rng& rng) {
    if (points.size() < 2) throw std::invalid_argument("jl_transform: need at least two points");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("jl_transform: epsilon must lie in (0, 1)");
    std::size_t src = points[0].x.size();
    for (const auto& p : points) {
        validate_point(p);
        if (p.x.size() != src) throw std::invalid_argument("jl_transform: points have mixed dimensions");
    }
    double n = static_cast<double>(points.size());
    auto k1 = static_cast<std::size_t>(std::ceil(8.0 * std::log(n) / (epsilon * epsilon)));
    ProjectionMap map = gaussian_projection(src, k1, 1.0 / std::sqrt(static_cast<double>(k1)), rng);
    std::vector<HalfSpacePoint> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(project_point(map, p));
    return {std::move(map), std::move(out)};
}

}  // namespace hyperlsh
