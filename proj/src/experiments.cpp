#include "hyperlsh/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "hyperlsh/geodesic.hpp"
#include "hyperlsh/lsh_hd.hpp"

namespace hyperlsh {

namespace {

// inverse-CDF sampler for the radial density sinh^{d-1}(t) on [0, R]; the
// density is integrated in scaled form exp((d-1)(log sinh t - log sinh R))
// so that no power of sinh overflows at large d
class RadialSampler {
public:
    RadialSampler(std::size_t d, double R) : d_(d), R_(R), cum_(kIntervals + 1, 0.0) {
        for (std::size_t i = 1; i <= kIntervals; ++i) {
            double a = R_ * static_cast<double>(i - 1) / kIntervals;
            double b = R_ * static_cast<double>(i) / kIntervals;
            cum_[i] = cum_[i - 1] + simpson(a, b);
        }
    }

    double radius_from_uniform(double u) const {
        double target = u * cum_[kIntervals];
        auto it = std::upper_bound(cum_.begin(), cum_.end(), target);
        std::size_t hi = std::min<std::size_t>(it - cum_.begin(), kIntervals);
        std::size_t lo_idx = hi > 0 ? hi - 1 : 0;
        double a = R_ * static_cast<double>(lo_idx) / kIntervals;
        double lo = a, up = R_ * static_cast<double>(hi) / kIntervals;
        double base = cum_[lo_idx];
        // the partial Simpson mass within one cell is strictly increasing in
        // its upper limit, so plain bisection converges
        while (up - lo > 1e-10) {
            double mid = 0.5 * (lo + up);
            if (base + simpson(a, mid) < target)
                lo = mid;
            else
                up = mid;
        }
        return 0.5 * (lo + up);
    }

private:
    static constexpr std::size_t kIntervals = 8192;

    double density(double t) const {
        if (t <= 0.0) return 0.0;
        double e = (static_cast<double>(d_) - 1.0) * (std::log(std::sinh(t)) - std::log(std::sinh(R_)));
        return std::exp(e);
    }

    double simpson(double a, double b) const {
        return (b - a) / 6.0 * (density(a) + 4.0 * density(0.5 * (a + b)) + density(b));
    }

    std::size_t d_;
    double R_;
    std::vector<double> cum_;
};

struct PairClasses {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> near_pairs;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> far_pairs;
};

// hashing-side view of a dataset plus its pairwise distances
struct Prepared {
    std::size_t dim = 2;
    // d = 2
    std::vector<double> px, py, pn2;
    // d >= 3
    std::vector<HalfSpacePoint> hs;
    std::vector<double> dist;  // upper triangle, row-major
    std::size_t n = 0;

    double pair_distance(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return dist[i * (2 * n - i - 1) / 2 + (j - i - 1)];
    }
};

Prepared prepare(const Dataset& data) {
    validate_dataset(data);
    Prepared prep;
    prep.dim = data.dim;
    prep.n = data.size();
    if (data.dim == 2) {
        auto pts = to_poincare(data);
        prep.px.resize(prep.n);
        prep.py.resize(prep.n);
        prep.pn2.resize(prep.n);
        for (std::size_t i = 0; i < prep.n; ++i) {
            prep.px[i] = pts[i].coords[0];
            prep.py[i] = pts[i].coords[1];
            prep.pn2[i] = prep.px[i] * prep.px[i] + prep.py[i] * prep.py[i];
        }
        prep.dist.resize(prep.n * (prep.n - 1) / 2);
        std::size_t k = 0;
        for (std::size_t i = 0; i < prep.n; ++i)
            for (std::size_t j = i + 1; j < prep.n; ++j)
                prep.dist[k++] = distance_poincare(pts[i], pts[j]);
    } else {
        prep.hs = to_halfspace(data);
        prep.dist.resize(prep.n * (prep.n - 1) / 2);
        std::size_t k = 0;
        for (std::size_t i = 0; i < prep.n; ++i)
            for (std::size_t j = i + 1; j < prep.n; ++j)
                prep.dist[k++] = distance_halfspace(prep.hs[i], prep.hs[j]);
    }
    return prep;
}

PairClasses classify(const Prepared& prep, double r, double c, bool boundary) {
    PairClasses cls;
    std::size_t k = 0;
    for (std::uint32_t i = 0; i < prep.n; ++i) {
        for (std::uint32_t j = i + 1; j < prep.n; ++j) {
            double d = prep.dist[k++];
            if (boundary) {
                if (d >= 0.9 * r && d <= r) cls.near_pairs.emplace_back(i, j);
                else if (d >= c * r && d <= 1.1 * c * r) cls.far_pairs.emplace_back(i, j);
            } else {
                if (d <= r) cls.near_pairs.emplace_back(i, j);
                else if (d >= c * r) cls.far_pairs.emplace_back(i, j);
            }
        }
    }
    return cls;
}

// identical arithmetic to hash_side, with the per-geodesic trigonometry
// hoisted out of the point loop
inline int side_2d(bool diameter, double cth, double sth, double coth_t,
                   double x, double y, double n2) {
    double dot = x * cth + y * sth;
    if (diameter) return dot >= 0.0 ? 1 : -1;
    double s = 1.0 + n2 - 2.0 * coth_t * dot;
    if (std::isnan(s)) s = 1.0 + n2;
    return s >= 0.0 ? 1 : -1;
}

double finish_rho(double p1, double p2) {
    if (p1 == 1.0 && p2 == 1.0) return std::numeric_limits<double>::quiet_NaN();
    if (p2 == 1.0) return std::numeric_limits<double>::infinity();
    if (p1 == 1.0) return 0.0;
    return std::log(p1) / std::log(p2);
}

RhoEstimate run_estimate(const Prepared& prep, const PairClasses& cls, double c, double R,
                         std::size_t reps, Rng& rng) {
    constexpr std::size_t kBlock = 256;                // reps per signature block
    constexpr std::size_t kWords = kBlock / 64;
    std::vector<std::uint64_t> sig(prep.n * kWords);
    std::uint64_t sep_near = 0, sep_far = 0;

    KinematicSampler sampler2d(prep.dim == 2 ? R : 1.0);
    std::size_t done = 0;
    while (done < reps) {
        std::size_t m = std::min(kBlock, reps - done);
        std::fill(sig.begin(), sig.end(), 0);
        for (std::size_t j = 0; j < m; ++j) {
            std::uint64_t bit = 1ULL << (j & 63);
            std::size_t word = j >> 6;
            if (prep.dim == 2) {
                Geodesic g = sample_geodesic(sampler2d, rng);
                bool diameter = !g.radius.has_value();
                double cth = std::cos(g.theta), sth = std::sin(g.theta);
                double coth_t = diameter ? 0.0 : 1.0 / std::tanh(g.t);
                for (std::size_t i = 0; i < prep.n; ++i)
                    if (side_2d(diameter, cth, sth, coth_t, prep.px[i], prep.py[i], prep.pn2[i]) > 0)
                        sig[i * kWords + word] |= bit;
            } else {
                HdHasher h = new_hd_hasher(prep.dim, R, rng);
                for (std::size_t i = 0; i < prep.n; ++i)
                    if (hash_hd(h, prep.hs[i]) > 0) sig[i * kWords + word] |= bit;
            }
        }
        for (const auto& [a, b] : cls.near_pairs)
            for (std::size_t w = 0; w < kWords; ++w)
                sep_near += std::popcount(sig[a * kWords + w] ^ sig[b * kWords + w]);
        for (const auto& [a, b] : cls.far_pairs)
            for (std::size_t w = 0; w < kWords; ++w)
                sep_far += std::popcount(sig[a * kWords + w] ^ sig[b * kWords + w]);
        done += m;
    }

    RhoEstimate est;
    est.c = c;
    est.n_near_pairs = cls.near_pairs.size();
    est.n_far_pairs = cls.far_pairs.size();
    double denom_near = static_cast<double>(reps) * static_cast<double>(cls.near_pairs.size());
    double denom_far = static_cast<double>(reps) * static_cast<double>(cls.far_pairs.size());
    est.p1_hat = 1.0 - static_cast<double>(sep_near) / denom_near;
    est.p2_hat = 1.0 - static_cast<double>(sep_far) / denom_far;
    est.rho_hat = finish_rho(est.p1_hat, est.p2_hat);
    return est;
}

void check_estimate_args(double r, double c, double R, std::size_t reps) {
    if (!(r > 0.0)) throw std::domain_error("estimate: r must be positive");
    if (!(c > 1.0)) throw std::domain_error("estimate: c must exceed 1");
    if (!(R > 0.0) || !std::isfinite(R)) throw std::domain_error("estimate: R must be finite and positive");
    if (reps == 0) throw std::invalid_argument("estimate: reps must be positive");
}

RhoEstimate estimate_on(const Prepared& prep, double r, double c, double R, std::size_t reps,
                        Rng& rng, bool boundary) {
    PairClasses cls = classify(prep, r, c, boundary);
    if (cls.near_pairs.empty() || cls.far_pairs.empty())
        throw insufficient_pairs_error(cls.near_pairs.size(), cls.far_pairs.size());
    return run_estimate(prep, cls, c, R, reps, rng);
}

}  // namespace

insufficient_pairs_error::insufficient_pairs_error(std::size_t near_count, std::size_t far_count)
    : std::runtime_error("insufficient pairs: near=" + std::to_string(near_count) +
                         " far=" + std::to_string(far_count)),
      near_pairs(near_count),
      far_pairs(far_count) {}

Dataset sample_uniform_ball(std::size_t d, double R_hyp, std::size_t n, Rng& rng) {
    if (d < 2) throw std::domain_error("sample_uniform_ball: dimension must be at least 2");
    if (!(R_hyp > 0.0) || !(R_hyp <= 27.0))
        throw std::domain_error("sample_uniform_ball: radius must lie in (0, 27]");
    if (n == 0) throw std::invalid_argument("sample_uniform_ball: n must be positive");
    RadialSampler radial(d, R_hyp);
    Dataset data;
    data.model = Model::ball;
    data.dim = d;
    data.coords.reserve(n);
    data.ids.reserve(n);
    std::vector<double> dir(d);
    for (std::size_t i = 0; i < n; ++i) {
        double t = radial.radius_from_uniform(rng.uniform());
        double norm2 = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            dir[k] = rng.normal();
            norm2 += dir[k] * dir[k];
        }
        double scale = norm2 > 0.0 ? std::tanh(t / 2.0) / std::sqrt(norm2) : 0.0;
        std::vector<double> row(d);
        for (std::size_t k = 0; k < d; ++k) row[k] = dir[k] * scale;
        data.coords.push_back(std::move(row));
        data.ids.push_back(i);
    }
    return data;
}

RhoEstimate estimate_p1_p2(const Dataset& points, double r, double c, double R,
                           std::size_t reps, Rng& rng) {
    check_estimate_args(r, c, R, reps);
    Prepared prep = prepare(points);
    return estimate_on(prep, r, c, R, reps, rng, false);
}

RhoEstimate boundary_pair_experiment(const Dataset& points, double r, double c, double R,
                                     std::size_t reps, Rng& rng) {
    check_estimate_args(r, c, R, reps);
    Prepared prep = prepare(points);
    return estimate_on(prep, r, c, R, reps, rng, true);
}

std::vector<RhoEstimate> rho_curve(const ExperimentConfig& config) {
    if (config.c_grid.empty()) throw std::invalid_argument("rho_curve: empty c grid");
    for (std::size_t i = 0; i < config.c_grid.size(); ++i) {
        if (!(config.c_grid[i] > 1.0)) throw std::domain_error("rho_curve: c values must exceed 1");
        if (i > 0 && !(config.c_grid[i] > config.c_grid[i - 1]))
            throw std::invalid_argument("rho_curve: c grid must be strictly ascending");
    }
    check_estimate_args(config.r, config.c_grid[0], config.R_hyp, config.reps);
    Rng master(config.seed);
    Dataset data = sample_uniform_ball(config.d, config.R_hyp, config.n, master);
    Prepared prep = prepare(data);
    std::vector<RhoEstimate> out;
    out.reserve(config.c_grid.size());
    for (double c : config.c_grid) {
        Rng child = master.child();
        out.push_back(estimate_on(prep, config.r, c, config.R_hyp, config.reps, child, false));
    }
    return out;
}

std::vector<RhoRow> rho_rows(const Dataset& points, double r, const std::vector<double>& c_grid,
                             double R, std::size_t reps, std::uint64_t seed, bool boundary) {
    if (c_grid.empty()) throw std::invalid_argument("rho_rows: empty c grid");
    check_estimate_args(r, c_grid[0], R, reps);
    Prepared prep = prepare(points);
    Rng master(seed);
    std::vector<RhoRow> out;
    out.reserve(c_grid.size());
    for (double c : c_grid) {
        if (!(c > 1.0)) throw std::domain_error("rho_rows: c values must exceed 1");
        Rng child = master.child();
        RhoRow row;
        try {
            row.estimate = estimate_on(prep, r, c, R, reps, child, boundary);
            row.ok = true;
        } catch (const insufficient_pairs_error& e) {
            row.estimate.c = c;
            row.estimate.p1_hat = std::numeric_limits<double>::quiet_NaN();
            row.estimate.p2_hat = std::numeric_limits<double>::quiet_NaN();
            row.estimate.rho_hat = std::numeric_limits<double>::quiet_NaN();
            row.estimate.n_near_pairs = e.near_pairs;
            row.estimate.n_far_pairs = e.far_pairs;
            row.ok = false;
            row.note = e.what();
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace hyperlsh
