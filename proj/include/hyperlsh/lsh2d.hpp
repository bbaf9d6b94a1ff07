#pragma once

#include <cstddef>

#include "hyperlsh/geodesic.hpp"
#include "hyperlsh/geometry.hpp"
#include "hyperlsh/rng.hpp"

namespace hyperlsh {

// probability that one sampled geodesic leaves two points at distance r on
// the same side: 1 - r / (pi sinh R)
double collision_probability(double r, double R);

struct LshFamilyParams {
    double r;
    double c;
    double R;
    double p1;   // collision probability at distance r
    double p2;   // collision probability at distance c r
    double rho;  // ln(1/p1) / ln(1/p2)
};

LshFamilyParams make_lsh_family_params(double r, double c, double R);

double rho_exact(double r, double c, double R);
double rho_bound(double c);  // 1/c

// empirical collision rate of the pair over n_samples fresh geodesics; both
// points must lie in the closed ball of hyperbolic radius R
double estimate_collision_mc(const PoincarePoint& x, const PoincarePoint& y, double R,
                             std::size_t n_samples, Rng& rng);

}  // namespace hyperlsh
