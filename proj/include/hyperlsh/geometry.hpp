#pragma once

#include <cstddef>
#include <vector>

namespace hyperlsh {

// Poincare ball model: ||coords|| < 1, any dimension >= 2.
struct PoincarePoint {
    std::vector<double> coords;
};

// Upper half-space model: (z, x) with z > 0, x of dimension d-1.
struct HalfSpacePoint {
    double z = 1.0;
    std::vector<double> x;
};

// Hyperboloid (upper sheet): coords = (x0, x1, ..., xd) with
// -x0^2 + x1^2 + ... + xd^2 = -1 and x0 >= 1.
struct HyperboloidPoint {
    std::vector<double> coords;
};

// accurate arccosh(1 + w) for w >= 0, stable as w -> 0
double stable_arccosh1p(double w);

void validate_point(const PoincarePoint& p);
void validate_point(const HalfSpacePoint& p);
void validate_point(const HyperboloidPoint& p);

double distance_poincare(const PoincarePoint& a, const PoincarePoint& b);
double distance_halfspace(const HalfSpacePoint& a, const HalfSpacePoint& b);
double distance_hyperboloid(const HyperboloidPoint& a, const HyperboloidPoint& b);

// Minkowski bilinear form with signature (-,+,...,+)
double minkowski_inner(const HyperboloidPoint& a, const HyperboloidPoint& b);

// distance to the model's reference point (ball origin / (z=1, x=0) / (1, 0, ..., 0))
double hyperbolic_norm(const PoincarePoint& p);
double hyperbolic_norm(const HalfSpacePoint& p);
double hyperbolic_norm(const HyperboloidPoint& p);

HalfSpacePoint poincare_to_halfspace(const PoincarePoint& p);
PoincarePoint halfspace_to_poincare(const HalfSpacePoint& p);
HyperboloidPoint poincare_to_hyperboloid(const PoincarePoint& p);
PoincarePoint hyperboloid_to_poincare(const HyperboloidPoint& p);

}  // namespace hyperlsh
