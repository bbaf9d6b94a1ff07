#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hyperlsh/experiments.hpp"
#include "hyperlsh/geometry.hpp"
#include "hyperlsh/lsh2d.hpp"

using namespace hyperlsh;

namespace {

// cumulative distribution of the radius density sinh(t)^{d-1} on [0, R],
// tabulated by trapezoid sums on a fine grid
struct RadialCdf {
    double R;
    std::vector<double> cum;
    RadialCdf(int d, double R_in) : R(R_in), cum(200001, 0.0) {
        double h = R / 200000.0;
        auto f = [&](double t) { return std::pow(std::sinh(t), d - 1); };
        for (std::size_t i = 1; i < cum.size(); ++i) {
            double a = h * double(i - 1), b = h * double(i);
            cum[i] = cum[i - 1] + 0.5 * h * (f(a) + f(b));
        }
        for (auto& v : cum) v /= cum.back();
    }
    double operator()(double t) const {
        if (t <= 0.0) return 0.0;
        if (t >= R) return 1.0;
        double pos = t / R * 200000.0;
        std::size_t i = std::size_t(pos);
        double frac = pos - double(i);
        return cum[i] + frac * (cum[i + 1] - cum[i]);
    }
};

double ks_statistic(std::vector<double> sorted_norms, const RadialCdf& cdf) {
    std::sort(sorted_norms.begin(), sorted_norms.end());
    double n = double(sorted_norms.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < sorted_norms.size(); ++i) {
        double f = cdf(sorted_norms[i]);
        worst = std::max(worst, std::abs(f - double(i) / n));
        worst = std::max(worst, std::abs(double(i + 1) / n - f));
    }
    return worst;
}

std::vector<double> sample_norms(std::size_t d, double R, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Dataset data = sample_uniform_ball(d, R, n, rng);
    std::vector<double> norms;
    norms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) norms.push_back(hyperbolic_norm(row_to_poincare(data, i)));
    return norms;
}

// symmetric pair on the given axis at the given distance
void push_pair(Dataset& d, double dist, bool on_y, std::uint64_t id0) {
    double a = std::tanh(dist / 4.0);
    if (on_y) {
        d.coords.push_back({0.0, a});
        d.coords.push_back({0.0, -a});
    } else {
        d.coords.push_back({-a, 0.0});
        d.coords.push_back({a, 0.0});
    }
    d.ids.push_back(id0);
    d.ids.push_back(id0 + 1);
}

}  // namespace

TEST_CASE("uniform ball samples stay inside the ball and are seeded") {
    Rng a(40), b(40);
    Dataset d1 = sample_uniform_ball(2, 5.29330482472449240, 500, a);
    Dataset d2 = sample_uniform_ball(2, 5.29330482472449240, 500, b);
    CHECK(d1.coords == d2.coords);
    CHECK(d1.ids == d2.ids);
    CHECK(d1.dim == 2);
    for (std::size_t i = 0; i < d1.size(); ++i) {
        double n2 = d1.coords[i][0] * d1.coords[i][0] + d1.coords[i][1] * d1.coords[i][1];
        CHECK(n2 <= 0.99 * 0.99 + 1e-12);  // tanh(R/2) = 0.99 exactly at R = log 199
        CHECK(hyperbolic_norm(row_to_poincare(d1, i)) <= 5.29330482472449240 + 1e-9);
    }
}

TEST_CASE("sampled radii follow the boundary-heavy volume law") {
    for (std::size_t d : {std::size_t(2), std::size_t(10)}) {
        RadialCdf cdf(int(d), 2.0);
        double ks = ks_statistic(sample_norms(d, 2.0, 100000, 900 + d), cdf);
        CHECK(ks < 0.01);
    }
}

TEST_CASE("a tiny ball collapses to the origin") {
    Rng rng(41);
    Dataset d = sample_uniform_ball(2, 1e-12, 5, rng);
    for (const auto& row : d.coords) {
        for (double v : row) CHECK(std::abs(v) <= 1e-9);
    }
}

TEST_CASE("ball sampling validates its arguments") {
    Rng rng(42);
    CHECK_THROWS_AS(sample_uniform_ball(1, 1.0, 5, rng), std::domain_error);
    CHECK_THROWS_AS(sample_uniform_ball(2, 0.0, 5, rng), std::domain_error);
    CHECK_THROWS_AS(sample_uniform_ball(2, 28.0, 5, rng), std::domain_error);
    CHECK_THROWS_AS(sample_uniform_ball(2, 1.0, 0, rng), std::invalid_argument);
}

TEST_CASE("collision estimates match the closed form on a known configuration") {
    Dataset d;
    d.model = Model::ball;
    d.dim = 2;
    push_pair(d, 0.3, false, 0);  // the one near pair
    push_pair(d, 5.0, true, 2);   // far pair; crosses are far as well
    const std::size_t reps = 20000;
    Rng rng(43);
    RhoEstimate est = estimate_p1_p2(d, 0.5, 2.0, 3.0, reps, rng);
    CHECK(est.n_near_pairs == 1);
    CHECK(est.n_far_pairs == 5);

    double p1 = collision_probability(0.3, 3.0);
    CHECK(std::abs(est.p1_hat - p1) <= 4.0 * std::sqrt(p1 * (1.0 - p1) / double(reps)));

    // the far estimate averages the five pairwise collision probabilities
    double p2 = 0.0;
    std::vector<std::size_t> far_a{0, 0, 1, 1, 2};
    std::vector<std::size_t> far_b{2, 3, 2, 3, 3};
    for (std::size_t k = 0; k < 5; ++k) {
        p2 += collision_probability(
            distance_poincare(row_to_poincare(d, far_a[k]), row_to_poincare(d, far_b[k])), 3.0);
    }
    p2 /= 5.0;
    CHECK(std::abs(est.p2_hat - p2) <= 4.0 * 0.5 / std::sqrt(double(reps)));
    CHECK(est.rho_hat > 0.0);
    CHECK(est.rho_hat < 1.0);
}

TEST_CASE("estimates are deterministic in the seed") {
    Dataset d;
    d.model = Model::ball;
    d.dim = 2;
    push_pair(d, 0.3, false, 0);
    push_pair(d, 5.0, true, 2);
    Rng a(44), b(44);
    RhoEstimate e1 = estimate_p1_p2(d, 0.5, 2.0, 3.0, 500, a);
    RhoEstimate e2 = estimate_p1_p2(d, 0.5, 2.0, 3.0, 500, b);
    CHECK(e1.p1_hat == e2.p1_hat);
    CHECK(e1.p2_hat == e2.p2_hat);
    CHECK(e1.rho_hat == e2.rho_hat);
}

TEST_CASE("an empty pair class raises the dedicated error") {
    Dataset d;
    d.model = Model::ball;
    d.dim = 2;
    push_pair(d, 0.3, false, 0);  // near only
    Rng rng(45);
    bool threw = false;
    try {
        estimate_p1_p2(d, 0.5, 2.0, 3.0, 100, rng);
    } catch (const insufficient_pairs_error& e) {
        threw = true;
        CHECK(e.near_pairs == 1);
        CHECK(e.far_pairs == 0);
    }
    CHECK(threw);

    Dataset gap;
    gap.model = Model::ball;
    gap.dim = 2;
    push_pair(gap, 0.7, false, 0);  // between r and c r
    Rng rng2(46);
    CHECK_THROWS_AS(estimate_p1_p2(gap, 0.5, 2.0, 3.0, 100, rng2), insufficient_pairs_error);
}

TEST_CASE("the boundary variant only counts annulus pairs") {
    Dataset d;
    d.model = Model::ball;
    d.dim = 2;
    push_pair(d, 0.48, false, 0);
    push_pair(d, 5.0, true, 2);
    Rng rng(47);
    // the far pair misses [c r, 1.1 c r], so the boundary variant refuses
    CHECK_THROWS_AS(boundary_pair_experiment(d, 0.5, 2.0, 3.0, 100, rng), insufficient_pairs_error);

    Dataset good;
    good.model = Model::ball;
    good.dim = 2;
    push_pair(good, 0.48, false, 0);
    push_pair(good, 1.02, true, 2);
    const std::size_t reps = 20000;
    Rng rng2(48);
    RhoEstimate est = boundary_pair_experiment(good, 0.5, 2.0, 3.0, reps, rng2);
    CHECK(est.n_near_pairs == 1);
    CHECK(est.n_far_pairs == 1);
    double p1 = collision_probability(0.48, 3.0);
    double p2 = collision_probability(1.02, 3.0);
    CHECK(std::abs(est.p1_hat - p1) <= 4.0 * std::sqrt(p1 * (1.0 - p1) / double(reps)));
    CHECK(std::abs(est.p2_hat - p2) <= 4.0 * std::sqrt(p2 * (1.0 - p2) / double(reps)));
}

TEST_CASE("the curve sweep returns one estimate per grid value") {
    ExperimentConfig config;
    config.d = 2;
    config.n = 300;
    config.R_hyp = 2.0;
    config.r = 0.5;
    config.c_grid = {1.5, 2.0, 3.0};
    config.reps = 3000;
    config.seed = 11;
    std::vector<RhoEstimate> rows = rho_curve(config);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].c == config.c_grid[i]);
        CHECK(rows[i].n_near_pairs > 0);
        CHECK(rows[i].n_far_pairs > 0);
        CHECK(rows[i].p2_hat < rows[i].p1_hat);
        CHECK(rows[i].rho_hat > 0.0);
        CHECK(rows[i].rho_hat < 1.0);
    }
    // deterministic end to end
    std::vector<RhoEstimate> again = rho_curve(config);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].p1_hat == again[i].p1_hat);
        CHECK(rows[i].p2_hat == again[i].p2_hat);
        CHECK(rows[i].rho_hat == again[i].rho_hat);
    }
}

TEST_CASE("the curve sweep validates the grid") {
    ExperimentConfig config;
    config.d = 2;
    config.n = 20;
    config.R_hyp = 1.0;
    config.r = 0.3;
    config.reps = 10;
    config.seed = 1;
    config.c_grid = {};
    CHECK_THROWS_AS(rho_curve(config), std::invalid_argument);
    config.c_grid = {2.0, 1.5};
    CHECK_THROWS_AS(rho_curve(config), std::invalid_argument);
    config.c_grid = {0.9};
    CHECK_THROWS_AS(rho_curve(config), std::domain_error);
}

TEST_CASE("row sweeps mark failed grid values instead of aborting") {
    Dataset sparse;
    sparse.model = Model::ball;
    sparse.dim = 2;
    sparse.coords = {{0.0, 0.0}, {std::tanh(2.0), 0.0}, {-std::tanh(2.0), 0.0}};
    sparse.ids = {0, 1, 2};
    std::vector<RhoRow> rows = rho_rows(sparse, 0.2, {2.0, 3.0}, 4.5, 50, 5, false);
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
        CHECK(!row.ok);
        CHECK(std::isnan(row.estimate.p1_hat));
        CHECK(std::isnan(row.estimate.rho_hat));
        CHECK(row.estimate.n_near_pairs == 0);
        CHECK(row.note.find("insufficient") != std::string::npos);
    }

    Dataset good;
    good.model = Model::ball;
    good.dim = 2;
    push_pair(good, 0.3, false, 0);
    push_pair(good, 5.0, true, 2);
    std::vector<RhoRow> ok_rows = rho_rows(good, 0.5, {2.0}, 3.0, 200, 6, false);
    REQUIRE(ok_rows.size() == 1);
    CHECK(ok_rows[0].ok);
    CHECK(!std::isnan(ok_rows[0].estimate.rho_hat));
    CHECK(ok_rows[0].note.empty());
}
