#pragma once

#include <cstddef>
#include <utility>

#include "hyperlsh/dimreduce.hpp"
#include "hyperlsh/geodesic.hpp"
#include "hyperlsh/geometry.hpp"
#include "hyperlsh/rng.hpp"

namespace hyperlsh {

// One hash function for points of H^d in half-space form: a Gaussian line
// projection of the x part (height kept), followed by a geodesic side test in
// the resulting plane.
struct HdHasher {
    ProjectionMap projection;  // (d-1) -> 1, unit scale
    double sampler_R = 1.0;
    Geodesic geodesic;
};

// draws the projection row first, then the geodesic
HdHasher new_hd_hasher(std::size_t d, double sampler_R, Rng& rng);

// disk image of a half-space point under the hasher's projection (no clamp)
PoincarePoint projected_disk_point(const ProjectionMap& map, const HalfSpacePoint& p);

// projects to the plane and hashes; images outside the sampler ball are
// radially clamped onto its boundary first (reported through `clamped`)
int hash_hd(const HdHasher& h, const HalfSpacePoint& p, bool* clamped = nullptr);

// closed-form band (lower, upper) for the collision probability of a pair at
// distance r: 1 - r/w <= p <= 1 - alpha r / w with w = pi sinh(sampler_R)
std::pair<double, double> collision_bounds_hd(double r, double sampler_R);

struct HdFamilyParams {
    double r;
    double c;
    double sampler_R;
    double p1;   // band lower bound at distance r
    double p2;   // band upper bound at distance c r
    double rho;  // ln(1/p1) / ln(1/p2)
};

// valid only when alpha c > 1, so that p2 < p1
HdFamilyParams make_hd_family_params(double r, double c, double sampler_R);

}  // namespace hyperlsh
