#include "hyperlsh/lsh2d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperlsh {

double collision_probability(double r, double R) {
    if (!(r >= 0.0)) throw std::domain_error("collision_probability: r must be nonnegative");
    if (!(R > 0.0) || !std::isfinite(R)) throw std::domain_error("collision_probability: R must be finite and positive");
    double w = std::numbers::pi * std::sinh(R);
    if (!(r <= w)) throw std::domain_error("collision_probability: r exceeds pi sinh R");
    return 1.0 - r / w;
}

LshFamilyParams make_lsh_family_params(double r, double c, double R) {
    if (!(r > 0.0)) throw std::domain_error("lsh family: r must be positive");
    if (!(c > 1.0)) throw std::domain_error("lsh family: c must exceed 1");
    if (!(R > 0.0) || !std::isfinite(R)) throw std::domain_error("lsh family: R must be finite and positive");
    double w = std::numbers::pi * std::sinh(R);
    if (!(c * r < w)) throw std::domain_error("lsh family: c r must be below pi sinh R");
    LshFamilyParams p;
    p.r = r;
    p.c = c;
    p.R = R;
    p.p1 = 1.0 - r / w;
    p.p2 = 1.0 - c * r / w;
    p.rho = std::log1p(-r / w) / std::log1p(-c * r / w);
    return p;
}

double rho_exact(double r, double c, double R) {
    return make_lsh_family_params(r, c, R).rho;
}

double rho_bound(double c) {
    if (!(c > 1.0)) throw std::domain_error("rho_bound: c must exceed 1");
    return 1.0 / c;
}

double estimate_collision_mc(const PoincarePoint& x, const PoincarePoint& y, double R,
                             std::size_t n_samples, Rng& rng) {
    if (n_samples == 0) throw std::invalid_argument("estimate_collision_mc: n_samples must be positive");
    KinematicSampler sampler(R);
    if (!(hyperbolic_norm(x) <= R + 1e-9) || !(hyperbolic_norm(y) <= R + 1e-9))
        throw std::domain_error("estimate_collision_mc: points must lie in the closed ball of radius R");
    std::size_t sep = 0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        Geodesic g = sample_geodesic(sampler, rng);
        if (separates(g, x, y)) ++sep;
    }
    return 1.0 - static_cast<double>(sep) / static_cast<double>(n_samples);
}

}  // namespace hyperlsh
