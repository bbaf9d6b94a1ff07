#include "hyperlsh/lsh_hd.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperlsh {

namespace {

void check_sampler_radius(double sampler_R) {
    // tanh(R/2) must stay clear of the disk validity boundary 1 - 1e-12
    if (!(sampler_R > 0.0 && sampler_R <= 25.0))
        throw std::domain_error("hd hasher: sampler_R must lie in (0, 25]");
}

}  // namespace

HdHasher new_hd_hasher(std::size_t d, double sampler_R, Rng& rng) {
    if (d < 3) throw std::invalid_argument("new_hd_hasher: ambient dimension must be at least 3");
    check_sampler_radius(sampler_R);
    HdHasher h;
    h.projection = gaussian_projection(d - 1, 1, 1.0, rng);
    h.sampler_R = sampler_R;
    h.geodesic = sample_geodesic(KinematicSampler(sampler_R), rng);
    return h;
}

PoincarePoint projected_disk_point(const ProjectionMap& map, const HalfSpacePoint& p) {
    validate_point(p);
    if (map.target_dim != 1) throw std::invalid_argument("projected_disk_point: projection must target one dimension");
    if (p.x.size() != map.source_dim) throw std::invalid_argument("projected_disk_point: dimension mismatch");
    double y = 0.0;
    for (std::size_t j = 0; j < map.source_dim; ++j) y += map.weights[j] * p.x[j];
    y *= map.scale;
    if (!(p.z <= 1e100) || !(std::fabs(y) <= 1e100))
        throw std::domain_error("projected_disk_point: coordinates too large");
    double t = y * y + (p.z + 1.0) * (p.z + 1.0);
    PoincarePoint out;
    out.coords = {2.0 * y / t, (1.0 - p.z * p.z - y * y) / t};
    return out;
}

int hash_hd(const HdHasher& h, const HalfSpacePoint& p, bool* clamped) {
    PoincarePoint u = projected_disk_point(h.projection, p);
    double en = std::sqrt(u.coords[0] * u.coords[0] + u.coords[1] * u.coords[1]);
    bool clip = false;
    if (en > 0.0 && 2.0 * std::atanh(std::min(en, 1.0)) > h.sampler_R) {
        double s = std::tanh(h.sampler_R / 2.0) / en;
        u.coords[0] *= s;
        u.coords[1] *= s;
        clip = true;
    }
    if (clamped) *clamped = clip;
    return hash_side(h.geodesic, u);
}

std::pair<double, double> collision_bounds_hd(double r, double sampler_R) {
    if (!(r >= 0.0)) throw std::domain_error("collision_bounds_hd: r must be nonnegative");
    check_sampler_radius(sampler_R);
    double w = std::numbers::pi * std::sinh(sampler_R);
    if (!(r < w)) throw std::domain_error("collision_bounds_hd: r at least pi sinh(sampler_R), lower bound vanishes");
    return {1.0 - r / w, 1.0 - alpha_constant() * r / w};
}

HdFamilyParams make_hd_family_params(double r, double c, double sampler_R) {
    if (!(r > 0.0)) throw std::domain_error("hd family: r must be positive");
    check_sampler_radius(sampler_R);
    double a = alpha_constant();
    if (!(a * c > 1.0))
        throw std::domain_error("hd family: c at most 1/alpha, probability band edges cross");
    double w = std::numbers::pi * std::sinh(sampler_R);
    if (!(r < w) || !(a * c * r < w))
        throw std::domain_error("hd family: distances too large for the sampler radius");
    HdFamilyParams f;
    f.r = r;
    f.c = c;
    f.sampler_R = sampler_R;
    f.p1 = 1.0 - r / w;
    f.p2 = 1.0 - a * c * r / w;
    f.rho = std::log1p(-r / w) / std::log1p(-a * c * r / w);
    return f;
}

}  // namespace hyperlsh
