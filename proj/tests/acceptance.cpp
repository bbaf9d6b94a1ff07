// End-to-end acceptance gates for the geodesic hashing library. Each
// criterion prints one [PASS]/[FAIL] line with a short numeric summary and
// the exit status is the number of failed criteria. Randomized criteria use
// fixed seeds, so a run is reproducible bit for bit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyperlsh/ann_index.hpp"
#include "hyperlsh/dimreduce.hpp"
#include "hyperlsh/experiments.hpp"
#include "hyperlsh/geodesic.hpp"
#include "hyperlsh/geometry.hpp"
#include "hyperlsh/lowerbound.hpp"
#include "hyperlsh/lsh2d.hpp"
#include "hyperlsh/lsh_hd.hpp"
#include "hyperlsh/validators.hpp"

using namespace hyperlsh;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] Criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return std::string(buf);
}

bool suite_passes(const std::string& which, std::string& detail) {
    bool ok = true;
    std::ostringstream out;
    for (const auto& r : run_validator(which)) {
        if (!r.pass) {
            ok = false;
            out << r.name << ": " << r.detail << "; ";
        }
    }
    detail = ok ? "all checks hold" : out.str();
    return ok;
}

// criterion 1: sampled geodesics reproduce the closed-form collision rate
void criterion_collision_mc() {
    struct Config {
        double r, R;
        std::uint64_t seed;
    };
    const std::vector<Config> configs{{0.2, 5.29330482472449240, 101}, {1.0, 3.0, 102},
                                      {0.5, 2.0, 103}};
    const std::size_t n = 1000000;
    bool ok = true;
    double worst_z = 0.0, worst_t = 0.0;
    for (const auto& cfg : configs) {
        auto t0 = clock_type::now();
        double a = std::tanh(cfg.r / 4.0);
        PoincarePoint x{{-a, 0.0}};
        PoincarePoint y{{a, 0.0}};
        Rng rng(cfg.seed);
        double hat = estimate_collision_mc(x, y, cfg.R, n, rng);
        double p = collision_probability(cfg.r, cfg.R);
        double se = std::sqrt(p * (1.0 - p) / double(n));
        double z = std::abs(hat - p) / se;
        worst_z = std::max(worst_z, z);
        double dt = seconds_since(t0);
        worst_t = std::max(worst_t, dt);
        if (z > 3.0 || dt > 30.0) ok = false;
    }
    report(1, "Monte Carlo collision rate matches the closed form",
           ok, fmt("3 configs, 1e6 geodesics each, worst |z| = %.2f (limit 3), slowest %.1fs", worst_z, worst_t));
}

// criterion 2: quadrature of the separating-geodesic measure returns 2r
void criterion_quadrature() {
    auto t0 = clock_type::now();
    bool ok = true;
    double worst = 0.0;
    for (double r : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0}) {
        double q = separation_measure_quadrature(r);
        double err = std::abs(q - 2.0 * r);
        worst = std::max(worst, err);
        if (err > 1e-8) ok = false;
    }
    double dt = seconds_since(t0);
    if (dt > 1.0) ok = false;
    report(2, "separation measure integrates to twice the distance", ok,
           fmt("6 radii from 0.01 to 5, worst error %.2e (limit 1e-8), %.2fs", worst, dt));
}

// criterion 3: the exact exponent never exceeds 1/c, and attains it as r -> 0
void criterion_exponent_bound() {
    bool ok = true;
    double worst_gap = -1.0;
    for (int i = 0; i < 10; ++i) {
        double r = 0.01 * std::pow(30.0, i / 9.0);
        for (int j = 0; j < 10; ++j) {
            double c = 1.1 * std::pow(10.0 / 1.1, j / 9.0);
            for (int k = 0; k < 10; ++k) {
                double R = 1.0 + 5.0 * k / 9.0;
                double gap = rho_exact(r, c, R) - rho_bound(c);
                worst_gap = std::max(worst_gap, gap);
                if (gap > 1e-12) ok = false;
            }
        }
    }
    double worst_limit = 0.0;
    for (double c : {1.5, 2.0, 4.0, 10.0}) {
        double err = std::abs(rho_exact(1e-9, c, 3.0) - rho_bound(c));
        worst_limit = std::max(worst_limit, err);
        if (err > 1e-6) ok = false;
    }
    if (std::abs(rho_exact(1e-9, 2.0, 3.0) - 0.49999999999205645) > 1e-12) ok = false;
    report(3, "exact exponent obeys and attains the 1/c bound", ok,
           fmt("1000-point grid, worst excess %.2e; small-r limit gap %.2e", worst_gap, worst_limit));
}

// criterion 4: the exact exponent decreases strictly in the radius
void criterion_monotone() {
    std::string detail;
    bool ok = suite_passes("monotone-g", detail);
    report(4, "exact exponent strictly decreases in the radius", ok, detail);
}

// criterion 5: subhomogeneity of the height-pair distance in the gap
void criterion_lemma_f() {
    auto t0 = clock_type::now();
    std::string detail;
    bool ok = suite_passes("lemma-f", detail);
    double dt = seconds_since(t0);
    if (dt > 5.0) ok = false;
    report(5, "height-pair distance is subhomogeneous in the gap", ok,
           fmt("100000 random tuples, %s, %.2fs", detail.c_str(), dt));
}

// criterion 6: projected collision rates stay inside the closed-form band
void criterion_band() {
    struct Config {
        double r, z1, z2;
    };
    std::vector<Config> configs;
    for (double r : {0.5, 1.0, 2.0}) {
        configs.push_back({r, 1.0, 1.0});
        configs.push_back({r, 0.9, 1.1});
        configs.push_back({r, 1.2, 0.95});
    }
    const std::size_t dim = 10;
    const double sampler_R = 6.0;
    const std::size_t reps = 100000;
    bool ok = true;
    double worst_margin = -1e9;
    int idx = 0;
    for (const auto& cfg : configs) {
        double s2 = 2.0 * cfg.z1 * cfg.z2 * (std::cosh(cfg.r) - 1.0) -
                    (cfg.z1 - cfg.z2) * (cfg.z1 - cfg.z2);
        double s = std::sqrt(s2);
        HalfSpacePoint x{cfg.z1, std::vector<double>(dim - 1, 0.0)};
        HalfSpacePoint y{cfg.z2, std::vector<double>(dim - 1, 0.0)};
        y.x[0] = s;
        if (std::abs(distance_halfspace(x, y) - cfg.r) > 1e-12) ok = false;
        Rng rng(600 + idx++);
        std::size_t agree = 0;
        for (std::size_t i = 0; i < reps; ++i) {
            HdHasher h = new_hd_hasher(dim, sampler_R, rng);
            if (hash_hd(h, x) == hash_hd(h, y)) ++agree;
        }
        double hat = double(agree) / double(reps);
        auto [lo, hi] = collision_bounds_hd(cfg.r, sampler_R);
        double se = std::sqrt(hi * (1.0 - lo) / double(reps));
        double margin = std::max(lo - hat, hat - hi) / se;  // > 0 means outside
        worst_margin = std::max(worst_margin, margin);
        if (margin > 3.0) ok = false;
    }
    double a = alpha_constant();
    if (!(a > 0.631 && a < 0.632 && 1.0 / a < 1.59)) ok = false;
    report(6, "projection contracts collisions into the closed-form band", ok,
           fmt("9 configs, 1e5 hashers each, worst band excess %.2f se (limit 3); alpha = %.6f",
               worst_margin, a));
}

// criterion 7: synthetic exponent curves across ambient dimensions
void criterion_curves() {
    std::ostringstream detail;
    bool ok = true;

    ExperimentConfig config;
    config.n = 1000;
    config.R_hyp = 5.29330482472449240;  // sinh R_hyp = 99.49749
    config.r = 0.2;
    config.reps = 1000;
    for (int i = 0; i < 18; ++i) config.c_grid.push_back(1.5 + 1.0 * i);

    double t_small = 0.0, t_large = 0.0;
    bool first = true;
    for (std::size_t d : {std::size_t(2), std::size_t(10), std::size_t(100), std::size_t(1000)}) {
        auto t0 = clock_type::now();
        config.d = d;
        config.seed = 7 + d;
        if (!first) detail << "; ";
        first = false;
        try {
            std::vector<RhoEstimate> rows = rho_curve(config);
            std::size_t below = 0;
            for (const auto& row : rows) {
                if (row.rho_hat > 0.0 && row.rho_hat < rho_bound(row.c)) ++below;
            }
            detail << "d=" << d << ": " << below << "/" << rows.size()
                   << " exponents below 1/c";
            if (below != rows.size()) ok = false;
        } catch (const insufficient_pairs_error& e) {
            // uniform volume concentrates at the boundary shell, so the near
            // class is empty at this radius; measure how empty
            Rng probe(config.seed);
            Dataset sample = sample_uniform_ball(d, config.R_hyp, config.n, probe);
            double min_dist = 1e300;
            std::vector<PoincarePoint> pts = to_poincare(sample);
            for (std::size_t i = 0; i < pts.size(); ++i) {
                for (std::size_t j = i + 1; j < pts.size(); ++j) {
                    min_dist = std::min(min_dist, distance_poincare(pts[i], pts[j]));
                }
            }
            detail << "d=" << d << ": no pairs within r=0.2 (closest sampled pair "
                   << fmt("%.2f", min_dist) << ", " << e.near_pairs << " near / " << e.far_pairs
                   << " far)";
            ok = false;
        }
        (d <= 100 ? t_small : t_large) += seconds_since(t0);
    }
    if (t_small > 600.0 || t_large > 1800.0) ok = false;
    report(7, "synthetic exponent curves for d in {2, 10, 100, 1000}", ok,
           fmt("%s; %.1fs through d=100 plus %.1fs for d=1000", detail.str().c_str(), t_small,
               t_large));
}

// criterion 8: boundary-pair experiment recovers the exact exponent
void criterion_boundary() {
    auto t0 = clock_type::now();
    const double r = 0.3;
    const double R = 2.2;
    const std::size_t reps = 400000;
    Rng data_rng(801);
    Dataset data = sample_uniform_ball(2, 2.0, 2000, data_rng);
    bool ok = true;
    std::ostringstream rho_part;
    std::vector<double> cs{2.0, 5.0, 10.0};
    std::vector<double> one_minus_p2;
    double worst_rel = 0.0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        Rng rng(810 + i);
        RhoEstimate est = boundary_pair_experiment(data, r, cs[i], R, reps, rng);
        double ref = rho_exact(r, cs[i], R);
        double rel = std::abs(est.rho_hat / ref - 1.0);
        worst_rel = std::max(worst_rel, rel);
        if (rel > 0.15) ok = false;
        one_minus_p2.push_back(1.0 - est.p2_hat);
    }
    // the far-side collision deficit grows linearly in c
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        sxx += cs[i] * cs[i];
        sxy += cs[i] * one_minus_p2[i];
    }
    double slope = sxy / sxx;
    double mean = (one_minus_p2[0] + one_minus_p2[1] + one_minus_p2[2]) / 3.0;
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        ss_res += std::pow(one_minus_p2[i] - slope * cs[i], 2);
        ss_tot += std::pow(one_minus_p2[i] - mean, 2);
    }
    double r2 = 1.0 - ss_res / ss_tot;
    if (r2 < 0.95) ok = false;
    double dt = seconds_since(t0);
    if (dt > 120.0) ok = false;
    report(8, "annulus pairs recover the exact exponent", ok,
           fmt("c in {2, 5, 10}, worst |rho/rho_exact - 1| = %.3f (limit 0.15), "
               "far deficit linear in c with R^2 = %.4f, %.1fs",
               worst_rel, r2, dt));
}

// criterion 9: the Hamming cube embedding distance sandwich
void criterion_sandwich() {
    auto t0 = clock_type::now();
    std::string d1, d2;
    bool ok = suite_passes("sandwich", d1);
    ok = suite_passes("puiseux", d2) && ok;
    double dt = seconds_since(t0);
    if (dt > 10.0) ok = false;
    report(9, "cube embedding distances sit in the square-root sandwich", ok,
           fmt("exhaustive pairs at three widths plus series bounds, %.2fs", dt));
}

// criterion 10: the three model distance computations agree
void criterion_model_agreement() {
    Rng rng(1001);
    double worst = 0.0;
    const std::size_t dims[3] = {2, 3, 7};
    for (int it = 0; it < 10000; ++it) {
        std::size_t d = dims[it % 3];
        auto draw = [&]() {
            std::vector<double> dir(d);
            double n2 = 0.0;
            for (auto& v : dir) {
                v = rng.normal();
                n2 += v * v;
            }
            double scale = std::tanh(10.0 * rng.uniform() / 2.0) / std::sqrt(n2);
            PoincarePoint p;
            for (double v : dir) p.coords.push_back(v * scale);
            return p;
        };
        PoincarePoint a = draw(), b = draw();
        double db = distance_poincare(a, b);
        double dh = distance_halfspace(poincare_to_halfspace(a), poincare_to_halfspace(b));
        double dy = distance_hyperboloid(poincare_to_hyperboloid(a), poincare_to_hyperboloid(b));
        worst = std::max(worst, std::abs(db - dh));
        worst = std::max(worst, std::abs(db - dy));
    }
    bool ok = worst <= 1e-9;
    report(10, "ball, half-space and hyperboloid distances agree", ok,
           fmt("10000 random pairs out to norm 10, worst deviation %.2e (limit 1e-9)", worst));
}

// criterion 11: the table index answers planted near-neighbor queries
void criterion_index_recall() {
    auto t0 = clock_type::now();
    bool ok = true;
    std::ostringstream detail;

    // frozen sizing at the reference configuration
    double R = 5.29330482472449240;
    LshFamilyParams family = make_lsh_family_params(0.2, 2.5, R);
    TableShape shape = choose_params(1000, family.p1, family.p2);
    detail << "sizing K=" << shape.K << " L=" << shape.L;
    if (shape.K != 4316 || shape.L != 16) ok = false;

    Rng data_rng(1101);
    Dataset data = sample_uniform_ball(2, R, 1000, data_rng);
    Rng build_rng(1102);
    LshIndex index = build_index(data, 0.2, 2.5, build_rng);
    detail << "; built K=" << index.params.K << " L=" << index.params.L;

    Rng qrng(1103);
    const int n_queries = 200;
    const double cr = 0.2 * 2.5;
    int found = 0, contract_violations = 0, oracle_mismatches = 0;
    for (int i = 0; i < n_queries; ++i) {
        std::size_t target = std::size_t(1000.0 * qrng.uniform());
        std::complex<double> p(data.coords[target][0], data.coords[target][1]);
        double dist = 0.2 * qrng.uniform_pos();
        double phi = 6.283185307179586 * qrng.uniform();
        std::complex<double> w = std::tanh(dist / 2.0) *
                                 std::complex<double>(std::cos(phi), std::sin(phi));
        std::complex<double> q = (w + p) / (1.0 + std::conj(p) * w);
        std::vector<double> qv{q.real(), q.imag()};
        // the planted target caps the true nearest-neighbor distance
        std::pair<std::uint64_t, double> oracle = brute_force_nn(data, qv);
        if (oracle.second > dist + 1e-12) ++oracle_mismatches;
        std::optional<std::uint64_t> got = query(index, qv);
        if (got) {
            ++found;
            // recompute the answer's distance from raw coordinates, not
            // through any index bookkeeping
            PoincarePoint qp{qv};
            double true_dist = distance_poincare(qp, row_to_poincare(data, *got));
            if (true_dist > cr + 1e-12) ++contract_violations;
            if (std::abs(query_distance(index, qv, *got) - true_dist) > 1e-12)
                ++contract_violations;
        }
    }
    double recall = double(found) / double(n_queries);
    detail << fmt("; recall %.3f over %d planted queries", recall, n_queries);
    if (recall < 0.9) ok = false;
    if (contract_violations != 0 || oracle_mismatches != 0) {
        ok = false;
        detail << "; " << contract_violations << " answers beyond c r, " << oracle_mismatches
               << " oracle mismatches";
    } else {
        detail << "; every answer within c r of the brute-force ground truth";
    }
    double dt = seconds_since(t0);
    if (dt > 60.0) ok = false;
    report(11, "planted queries are recalled by the table index", ok,
           fmt("%s, %.1fs", detail.str().c_str(), dt));
}

}  // namespace

int main() {
    criterion_collision_mc();
    criterion_quadrature();
    criterion_exponent_bound();
    criterion_monotone();
    criterion_lemma_f();
    criterion_band();
    criterion_curves();
    criterion_boundary();
    criterion_sandwich();
    criterion_model_agreement();
    criterion_index_recall();
    std::printf("%d of 11 criteria failed\n", g_failures);
    return g_failures;
}
