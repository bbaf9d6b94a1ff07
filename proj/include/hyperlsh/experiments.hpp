#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlsh/dataset.hpp"
#include "hyperlsh/rng.hpp"

namespace hyperlsh {

struct ExperimentConfig {
    std::size_t d = 2;
    std::size_t n = 0;
    double R_hyp = 1.0;        // data ball radius
    double r = 0.0;
    std::vector<double> c_grid;  // ascending, all > 1
    std::size_t reps = 1000;
    std::uint64_t seed = 0;
};

struct RhoEstimate {
    double c = 0.0;
    double p1_hat = 0.0;
    double p2_hat = 0.0;
    double rho_hat = 0.0;
    std::size_t n_near_pairs = 0;
    std::size_t n_far_pairs = 0;
};

class insufficient_pairs_error : public std::runtime_error {
public:
    insufficient_pairs_error(std::size_t near_count, std::size_t far_count);
    std::size_t near_pairs;
    std::size_t far_pairs;
};

// Uniform (hyperbolic volume) sample of the ball of radius R_hyp in H^d:
// direction uniform on the sphere, radius by inverse CDF of the sinh^{d-1}
// density; ball-model coordinates. One radius draw then d normals per point.
Dataset sample_uniform_ball(std::size_t d, double R_hyp, std::size_t n, Rng& rng);

// Classifies unordered pairs by true distance (near: <= r, far: >= c r,
// rest ignored) and measures collision rates over `reps` fresh hash
// functions (2D geodesics at sampler radius R for d = 2, line-projection
// hashers built with sampler_R = R for d >= 3). Throws
// insufficient_pairs_error when either class is empty.
RhoEstimate estimate_p1_p2(const Dataset& points, double r, double c, double R,
                           std::size_t reps, Rng& rng);

// same, restricted to the annuli [0.9 r, r] and [c r, 1.1 c r]
RhoEstimate boundary_pair_experiment(const Dataset& points, double r, double c, double R,
                                     std::size_t reps, Rng& rng);

// samples a dataset from the config and runs estimate_p1_p2 once per grid
// value; insufficient-pairs conditions propagate as exceptions
std::vector<RhoEstimate> rho_curve(const ExperimentConfig& config);

// Per-c sweep over an existing dataset for the CSV front end: estimates that
// fail their pair precondition become marked rows instead of aborting.
struct RhoRow {
    RhoEstimate estimate;
    bool ok = false;
    std::string note;
};
std::vector<RhoRow> rho_rows(const Dataset& points, double r, const std::vector<double>& c_grid,
                             double R, std::size_t reps, std::uint64_t seed, bool boundary);

}  // namespace hyperlsh
