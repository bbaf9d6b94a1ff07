#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperlsh/geometry.hpp"
#include "hyperlsh/rng.hpp"

namespace hyperlsh {

// Linear map applied to the horospherical part x of half-space points; the
// height z is left untouched.
struct ProjectionMap {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::vector<double> weights;  // row-major, target_dim x source_dim
    double scale = 1.0;
};

// rows of iid standard normals, drawn row by row
ProjectionMap gaussian_projection(std::size_t source_dim, std::size_t target_dim, double scale, Rng& rng);

HalfSpacePoint project_point(const ProjectionMap& map, const HalfSpacePoint& p);

// distance between half-space points at heights z1, z2 whose x parts are s
// apart: arccosh(1 + (s^2 + (z1 - z2)^2) / (2 z1 z2))
double big_f(double z1, double z2, double s);

// subhomogeneity of F in s: F(gamma s) <= gamma F(s) for gamma >= 1 and
// F(gamma s) >= gamma F(s) for gamma <= 1, allowing 1e-12 relative slack
bool check_f_stretch(double z1, double z2, double s, double gamma);

// sqrt(2/pi) (1 - e^{-1/2}) + erfc(1/sqrt(2)), the one-dimensional projection
// contraction constant
double alpha_constant();

// Johnson-Lindenstrauss step: k - 1 = ceil(8 ln n / eps^2) rows at scale
// 1/sqrt(k - 1), applied to every point
std::pair<ProjectionMap, std::vector<HalfSpacePoint>> jl_transform(
    const std::vector<HalfSpacePoint>& points, double epsilon, Rng& rng);

}  // namespace hyperlsh
