#pragma once

#include <array>
#include <optional>

#include "hyperlsh/geometry.hpp"
#include "hyperlsh/rng.hpp"

namespace hyperlsh {

// A geodesic of the hyperbolic plane, indexed by its distance t >= 0 from the
// origin and the direction theta of the closest point. In the disk model it
// is the circular arc orthogonal to the boundary with euclidean center
// coth(t) e_theta and radius 1/sinh(t); t = 0 degenerates to the diameter
// orthogonal to e_theta. `normal` is the unit spacelike Minkowski normal
// (sinh t, cosh t cos theta, cosh t sin theta) of the same geodesic.
struct Geodesic {
    double t = 0.0;
    double theta = 0.0;
    std::optional<std::array<double, 2>> center;
    std::optional<double> radius;
    std::array<double, 3> normal{0.0, 1.0, 0.0};

    static Geodesic from_polar(double t, double theta);
};

// Invariant measure cosh(t) dt dtheta on geodesics meeting the disk of
// hyperbolic radius R around the origin.
struct KinematicSampler {
    double R;
    explicit KinematicSampler(double R);
    double total_measure() const;  // 2 pi sinh(R)
};

// inverse CDF of the marginal of t: u in [0, 1] -> arcsinh(u sinh R)
double geodesic_radius_from_uniform(double u, double R);

// draws t from its marginal, then theta uniform on [0, 2 pi)
Geodesic sample_geodesic(const KinematicSampler& sampler, Rng& rng);

// side of the geodesic a disk point falls on, in {-1, +1}; points exactly on
// the geodesic get +1
int hash_side(const Geodesic& g, const PoincarePoint& x);

// sign of the Minkowski inner product with the geodesic's normal; agrees with
// hash_side up to one global sign flip per geodesic
int hash_side_minkowski(const Geodesic& g, const HyperboloidPoint& x);

bool separates(const Geodesic& g, const PoincarePoint& x, const PoincarePoint& y);

// measure of the set of geodesics separating two points at distance r,
// computed by direct quadrature over theta; equals 2r
double separation_measure_quadrature(double r);

}  // namespace hyperlsh
