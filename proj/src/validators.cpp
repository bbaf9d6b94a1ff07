#include "hyperlsh/validators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "hyperlsh/dimreduce.hpp"
#include "hyperlsh/geodesic.hpp"
#include "hyperlsh/lowerbound.hpp"
#include "hyperlsh/lsh2d.hpp"
#include "hyperlsh/rng.hpp"

namespace hyperlsh {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

}  // namespace

std::vector<CheckResult> validate_integral() {
    std::vector<CheckResult> out;
    for (double r : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0}) {
        double got = separation_measure_quadrature(r);
        double err = std::fabs(got - 2.0 * r);
        out.push_back({fmt("integral r=%g", r), err <= 1e-8, fmt("|quadrature - 2r| = %.3g", err)});
    }
    return out;
}

std::vector<CheckResult> validate_log_ratio() {
    std::vector<CheckResult> out;
    for (double c : {1.1, 2.0, 5.0, 10.0}) {
        double worst = -1.0;
        for (int j = 1; j < 2000; ++j) {
            double x = 0.99 / c * static_cast<double>(j) / 2000.0;
            double ratio = std::log1p(-x) / std::log1p(-c * x);
            worst = std::max(worst, ratio - 1.0 / c);
        }
        out.push_back({fmt("log-ratio c=%g", c), worst <= 1e-12,
                       fmt("max ratio - 1/c = %.3g", worst)});
    }
    return out;
}

std::vector<CheckResult> validate_monotone_g() {
    std::vector<CheckResult> out;
    const double R = 3.0;
    const double w = std::numbers::pi * std::sinh(R);
    for (double c : {1.5, 2.0, 4.0}) {
        double r_min = 1e-3, r_max = 0.99 * w / c;
        bool ok = true;
        double prev = rho_exact(r_min, c, R);
        for (int j = 1; j < 1000; ++j) {
            double r = r_min + (r_max - r_min) * static_cast<double>(j) / 999.0;
            double cur = rho_exact(r, c, R);
            if (!(cur < prev)) {
                ok = false;
                break;
            }
            prev = cur;
        }
        out.push_back({fmt("monotone-g c=%g", c), ok,
                       ok ? "strictly decreasing over 1000-point grid" : "monotonicity violated"});
    }
    return out;
}

std::vector<CheckResult> validate_lemma_f() {
    Rng rng(20240917);
    auto log_uniform = [&rng](double lo, double hi) {
        return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * rng.uniform());
    };
    std::size_t failures = 0;
    const std::size_t trials = 100000;
    for (std::size_t i = 0; i < trials; ++i) {
        double z1 = log_uniform(0.05, 20.0);
        double z2 = log_uniform(0.05, 20.0);
        double s = log_uniform(1e-3, 10.0);
        double gamma = log_uniform(0.1, 10.0);
        if (!check_f_stretch(z1, z2, s, gamma)) ++failures;
    }
    return {{"lemma-f random tuples", failures == 0,
             fmt("failures: %.0f of %.0f", static_cast<double>(failures), static_cast<double>(trials))}};
}

std::vector<CheckResult> validate_puiseux() {
    bool ordered = true;
    for (int k = 1; k < 1000 && ordered; ++k) {
        PuiseuxSandwich s = puiseux_sandwich(static_cast<double>(k) / 1000.0);
        ordered = s.lower <= s.mid && s.mid <= s.upper;
    }
    PuiseuxSandwich tiny = puiseux_sandwich(1e-6);
    bool limit = tiny.mid / tiny.upper > 1.0 - 1e-6 && tiny.lower / tiny.mid > 1.0 - 1e-6;
    return {{"puiseux ordering", ordered, "grid of 999 points over (0,1)"},
            {"puiseux small-x limit", limit, fmt("ratios at x=1e-6: %.9f, %.9f", tiny.mid / tiny.upper, tiny.lower / tiny.mid)}};
}

std::vector<CheckResult> validate_sandwich() {
    std::vector<CheckResult> out;
    const std::size_t d = 8;
    for (double eps : {0.1, 0.5, 0.9}) {
        HammingEmbedding emb =
            make_hamming_embedding(d, std::sqrt(static_cast<double>(d) / (2.0 * eps)), eps);
        std::size_t failures = 0;
        std::vector<std::uint8_t> xi(d), xj(d);
        for (unsigned a = 0; a < 256; ++a) {
            for (unsigned b = a + 1; b < 256; ++b) {
                for (std::size_t k = 0; k < d; ++k) {
                    xi[k] = (a >> k) & 1u;
                    xj[k] = (b >> k) & 1u;
                }
                if (!verify_sandwich(emb, xi, xj)) ++failures;
            }
        }
        out.push_back({fmt("sandwich d=8 eps=%g", eps), failures == 0,
                       fmt("violations: %.0f of 32640", static_cast<double>(failures))});
    }
    return out;
}

std::vector<CheckResult> validate_stability() {
    Rng rng(5550123);
    const std::size_t dim = 19;
    std::vector<double> v(dim);
    double norm2 = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        v[k] = std::sin(static_cast<double>(3 * k + 1)) * 0.7;
        norm2 += v[k] * v[k];
    }
    double sigma = std::sqrt(norm2);
    const std::size_t n = 100000;
    std::vector<double> samples(n);
    for (std::size_t i = 0; i < n; ++i) {
        double y = 0.0;
        for (std::size_t k = 0; k < dim; ++k) y += rng.normal() * v[k];
        samples[i] = std::fabs(y);
    }
    std::sort(samples.begin(), samples.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double f = std::erf(samples[i] / (sigma * std::numbers::sqrt2));
        ks = std::max(ks, std::fabs(f - static_cast<double>(i) / n));
        ks = std::max(ks, std::fabs(f - static_cast<double>(i + 1) / n));
    }
    return {{"stability half-normal law", ks < 0.005, fmt("KS statistic %.5f (bound 0.005)", ks)}};
}

std::vector<CheckResult> validate_alpha() {
    double t1 = std::sqrt(2.0 / std::numbers::pi) * (1.0 - std::exp(-0.5));
    double t2 = std::erfc(1.0 / std::numbers::sqrt2);
    double a = alpha_constant();
    std::vector<CheckResult> out;
    out.push_back({"alpha digits", std::fabs(a - 0.63125361962749276) <= 1e-15,
                   fmt("alpha = %.17g", a)});
    out.push_back({"alpha terms", std::fabs(t1 - 0.31394311176457866) <= 1e-15 &&
                                      std::fabs(t2 - 0.31731050786291410) <= 1e-15,
                   fmt("%.17g + %.17g", t1, t2)});
    out.push_back({"alpha range", a > 0.631 && a < 0.632, fmt("in (0.631, 0.632): %.6f", a)});
    out.push_back({"one over alpha", 1.0 / a <= 1.59, fmt("1/alpha = %.17g", 1.0 / a)});
    return out;
}

const std::vector<std::string>& validator_names() {
    static const std::vector<std::string> names = {"integral",  "log-ratio", "monotone-g",
                                                   "lemma-f",   "puiseux",   "sandwich",
                                                   "stability", "alpha"};
    return names;
}

std::vector<CheckResult> run_validator(const std::string& which) {
    if (which == "integral") return validate_integral();
    if (which == "log-ratio") return validate_log_ratio();
    if (which == "monotone-g") return validate_monotone_g();
    if (which == "lemma-f") return validate_lemma_f();
    if (which == "puiseux") return validate_puiseux();
    if (which == "sandwich") return validate_sandwich();
    if (which == "stability") return validate_stability();
    if (which == "alpha") return validate_alpha();
    throw std::invalid_argument("unknown validator: " + which);
}

}  // namespace hyperlsh
